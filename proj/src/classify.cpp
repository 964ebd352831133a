#include "cb/classify.hpp"

#include <numeric>
#include <sstream>

namespace cb {

std::string FiveManifoldType::display() const {
    std::ostringstream os;
    if (kind == Kind::BConnSum) {
        os << "B";
        if (s2xs3_count == 1)
            os << " # S^2 x S^3";
        else if (s2xs3_count > 1)
            os << " # #_" << s2xs3_count << " S^2 x S^3";
        return os.str();
    }
    if (s2xs3_count == 0) return "S^5";
    if (s2xs3_count == 1) return "S^2 x S^3";
    os << "#_" << s2xs3_count << " S^2 x S^3";
    return os.str();
}

std::string FiveManifoldType::kind_name(Kind k) {
    return k == Kind::ConnSum ? "CONN_SUM" : "B_CONN_SUM";
}

NonPrimitiveError::NonPrimitiveError(Int divisibility)
    : std::invalid_argument("Euler class is not primitive (divisibility " +
                            divisibility.str() + "); cohomology is still available"),
      divisibility_(std::move(divisibility)) {}

FiveManifoldType classify(const FourManifold& m, const EulerClass& alpha) {
    Int d = divisibility(m, alpha);
    if (d != 1) throw NonPrimitiveError(std::move(d));
    const std::size_t r = m.rank();
    if (is_total_space_spin(m, alpha))
        return {FiveManifoldType::Kind::ConnSum, r - 1};
    // Non-spin total space needs r >= 2: for r = 1 the form is odd of
    // rank 1 and any primitive alpha is = wu mod 2, so we never get here.
    return {FiveManifoldType::Kind::BConnSum, r - 2};
}

EulerClass find_spin_euler_class(const FourManifold& m) {
    Mod2Class w = m.wu_class();
    const std::size_t r = m.rank();

    std::vector<Int> lift(r);
    for (std::size_t i = 0; i < r; ++i) lift[i] = w.coords[i];

    if (w.is_zero()) {
        // Spin condition already met by w2 = 0; any primitive class works.
        lift[0] = 1;
        return EulerClass{lift};
    }
    // A nonzero 0/1 lift has content 1, but guard anyway: adding 2 to a
    // coordinate preserves the mod-2 class and can only shrink the gcd.
    for (std::size_t i = 0; content(lift) != 1 && i < r; ++i) lift[i] += 2;
    if (content(lift) != 1)
        throw std::logic_error("find_spin_euler_class: no primitive lift found");
    return EulerClass{lift};
}

PrimitiveEnumerator::PrimitiveEnumerator(std::size_t rank, long long bound)
    : rank_(rank), bound_(bound) {
    if (rank_ == 0) throw std::invalid_argument("PrimitiveEnumerator: rank must be >= 1");
    if (bound_ < 1) throw std::invalid_argument("PrimitiveEnumerator: bound must be >= 1");
    reset();
}

void PrimitiveEnumerator::reset() {
    current_.assign(rank_, -bound_);
    exhausted_ = false;
}

bool PrimitiveEnumerator::advance() {
    // Odometer in lexicographic order, last coordinate fastest.
    std::size_t i = rank_;
    while (i > 0) {
        --i;
        if (current_[i] < bound_) {
            ++current_[i];
            std::fill(current_.begin() + static_cast<std::ptrdiff_t>(i) + 1, current_.end(),
                      -bound_);
            return true;
        }
    }
    return false;
}

std::optional<EulerClass> PrimitiveEnumerator::next() {
    while (!exhausted_) {
        std::vector<Int> coords(current_.begin(), current_.end());
        bool primitive = content(coords) == 1;
        if (!advance()) exhausted_ = true;
        if (primitive) return EulerClass{std::move(coords)};
    }
    return std::nullopt;
}

}  // namespace cb
