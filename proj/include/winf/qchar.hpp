#pragma once

#include <vector>

#include "winf/series.hpp"

namespace winf {

// Sum of fundamental weights n_1 >= ... >= n_k plus a vacuum multiple h.
// For gl the n_i are arbitrary integers and h is unused; for b, c, d the
// n_i are >= 1 and h counts Lambda_0.
struct FundWeightSum {
    char algebra;  // 'a' (gl), 'b', 'c', 'd'
    std::vector<long long> n;
    long long h = 0;

    Rat central() const;
    // conjugate partition lambda_1..lambda_{n_1} (empty when k = 0)
    std::vector<long long> conjugate() const;
    void validate() const;
};

// Closed-form q-character of L(algebra; weight) truncated at the order.
QSeries qchar(const FundWeightSum& w, int order2);

// Unsimplified Weyl-Kac coroot products for b and c, from the labels.
QSeries raw_weylkac_qchar(char algebra, const std::vector<long long>& lambda, long long twoc,
                          int order2);
QSeries raw_weylkac_qchar(const FundWeightSum& w, int order2);

// Hook-number product over the Young diagram of (n_1..n_k).
QSeries hook_product_char(const std::vector<long long>& n, int order2);

enum class WalgKind { WD, WBSuper };
QSeries walg_char(WalgKind kind, int l, int order2);

// d-character for arbitrary integral labels with 2c possibly odd; used by the
// duality machinery. lambda is the weakly decreasing label vector.
QSeries dinf_char_from_labels(const std::vector<Rat>& lambda, const Rat& c, int order2);

}  // namespace winf
