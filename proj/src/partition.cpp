#include "partition.hpp"

#include <algorithm>
#include <functional>

namespace pfun {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be nonincreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

int Partition::multiplicity(int j) const {
    auto lo = std::lower_bound(parts_.begin(), parts_.end(), j, std::greater<int>());
    auto hi = std::upper_bound(parts_.begin(), parts_.end(), j, std::greater<int>());
    return static_cast<int>(hi - lo);
}

int Partition::count_parts_at_least(int j) const {
    auto hi = std::upper_bound(parts_.begin(), parts_.end(), j, std::greater<int>());
    return static_cast<int>(hi - parts_.begin());
}

int durfee_order(const Partition& lambda) {
    int k = 0;
    while (k < lambda.length() && lambda.part(k + 1) >= k + 1)
        ++k;
    return k;
}

Partition conjugate(const Partition& lambda) {
    if (lambda.empty())
        return Partition{};
    std::vector<int> t(static_cast<size_t>(lambda.part(1)));
    for (int p : lambda.parts())
        for (int j = 0; j < p; ++j)
            ++t[static_cast<size_t>(j)];
    return Partition(std::move(t));
}

Partition union_of(const Partition& lambda, const Partition& mu) {
    std::vector<int> all;
    all.reserve(lambda.parts().size() + mu.parts().size());
    all.insert(all.end(), lambda.parts().begin(), lambda.parts().end());
    all.insert(all.end(), mu.parts().begin(), mu.parts().end());
    return Partition::from_unsorted(std::move(all));
}

DurfeeDecomposition decompose_durfee(const Partition& lambda) {
    DurfeeDecomposition d;
    d.order = durfee_order(lambda);
    std::vector<int> below(lambda.parts().begin() + d.order, lambda.parts().end());
    Partition conj = conjugate(lambda);
    std::vector<int> right(conj.parts().begin() + std::min<size_t>(d.order, conj.parts().size()),
                           conj.parts().end());
    d.below = Partition(std::move(below));
    d.right = Partition(std::move(right));
    return d;
}

Partition recompose_durfee(const DurfeeDecomposition& d) {
    const int k = d.order;
    /* Rows 1..k are k plus the column surpluses encoded by the conjugate of
     * `right`; the remaining rows are `below` verbatim. */
    Partition rc = conjugate(d.right);
    std::vector<int> parts;
    for (int j = 1; j <= k; ++j)
        parts.push_back(k + (j <= rc.length() ? rc.part(j) : 0));
    parts.insert(parts.end(), d.below.parts().begin(), d.below.parts().end());
    return Partition(std::move(parts));
}

long dyson_rank(const Partition& lambda) {
    if (lambda.empty())
        throw std::domain_error("dyson_rank: empty partition");
    return lambda.part(1) - lambda.length();
}

FrobeniusSymbol frobenius(const Partition& lambda) {
    if (lambda.empty())
        throw std::domain_error("frobenius: empty partition");
    const int k = durfee_order(lambda);
    Partition conj = conjugate(lambda);
    FrobeniusSymbol f;
    for (int j = 1; j <= k; ++j) {
        f.top.push_back(lambda.part(j) - j);
        f.bottom.push_back(conj.part(j) - j);
    }
    return f;
}

Partition from_frobenius(const FrobeniusSymbol& f) {
    const int k = static_cast<int>(f.top.size());
    if (f.bottom.size() != f.top.size())
        throw std::invalid_argument("from_frobenius: row lengths differ");
    DurfeeDecomposition d;
    d.order = k;
    /* b_j = lambda'_j - j gives the column lengths below the square; rebuild
     * `below` as the conjugate of those columns, and `right` from a_j. */
    std::vector<int> cols, rows;
    for (int j = 1; j <= k; ++j) {
        int bj = f.bottom[static_cast<size_t>(j - 1)] + j - k;  // depth below the square
        int aj = f.top[static_cast<size_t>(j - 1)] + j - k;     // width right of the square
        if (bj > 0)
            cols.push_back(bj);
        if (aj > 0)
            rows.push_back(aj);
    }
    d.below = conjugate(Partition::from_unsorted(std::move(cols)));
    d.right = conjugate(Partition::from_unsorted(std::move(rows)));
    return recompose_durfee(d);
}

std::vector<Partition> enumerate_partitions(long n, int max_part) {
    std::vector<Partition> out;
    for_each_partition(n, max_part, [&](const std::vector<int>& parts) {
        out.emplace_back(Partition(parts));
    });
    return out;
}

}  // namespace pfun
