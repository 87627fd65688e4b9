#pragma once

#include <vector>

#include "exact.hpp"

namespace pfun {

/* A partition: nonincreasing finite sequence of positive integer parts.
 * The empty partition (of 0) has weight 0, length 0 and Durfee order 0. */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // validates shape

    // sorts a bag of positive parts into canonical nonincreasing order
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    long weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int j) const { return parts_[static_cast<size_t>(j - 1)]; }  // 1-based

    int multiplicity(int j) const;       // number of parts equal to j
    int count_parts_at_least(int j) const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    long weight_ = 0;
};

struct FrobeniusSymbol {
    std::vector<int> top;     // a_j = lambda_j - j, strictly decreasing
    std::vector<int> bottom;  // b_j = lambda'_j - j, strictly decreasing
};

struct DurfeeDecomposition {
    int order = 0;    // side of the Durfee square
    Partition below;  // parts after the square (all <= order)
    Partition right;  // columns right of the square, read from the conjugate
};

// side of the largest square in the Ferrers graph: max k with lambda_k >= k
int durfee_order(const Partition& lambda);

Partition conjugate(const Partition& lambda);

// multiplicity of each part size adds
Partition union_of(const Partition& lambda, const Partition& mu);

DurfeeDecomposition decompose_durfee(const Partition& lambda);

// reassemble a partition from its Durfee decomposition (inverse of the above)
Partition recompose_durfee(const DurfeeDecomposition& d);

// largest part minus length; throws std::domain_error on the empty partition
long dyson_rank(const Partition& lambda);

FrobeniusSymbol frobenius(const Partition& lambda);  // throws on empty
Partition from_frobenius(const FrobeniusSymbol& f);

/* Visit every partition of n (parts <= max_part when positive) exactly once,
 * in lexicographically decreasing order.  The callback receives the raw
 * nonincreasing part list. */
template <class F>
void for_each_partition(long n, int max_part, F&& visit) {
    std::vector<int> acc;
    auto rec = [&](auto&& self, long rem, long top) -> void {
        if (rem == 0) {
            visit(static_cast<const std::vector<int>&>(acc));
            return;
        }
        for (long p = std::min(rem, top); p >= 1; --p) {
            acc.push_back(static_cast<int>(p));
            self(self, rem - p, p);
            acc.pop_back();
        }
    };
    if (n < 0)
        return;
    rec(rec, n, max_part > 0 ? static_cast<long>(max_part) : n);
}

std::vector<Partition> enumerate_partitions(long n, int max_part = 0);

}  // namespace pfun
