#pragma once

// Homeomorphism type of the total space M(alpha) for primitive alpha:
// either #_{r-1} S^2 x S^3 (spin) or B # #_{r-2} S^2 x S^3 (non-spin),
// plus the constructive choice of a primitive class matching w2 mod 2
// and an enumerator over primitive classes.

#include "cb/exactalg.hpp"
#include "cb/fourmanifold.hpp"
#include "cb/gysin.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace cb {

// Classification outcome for a simply connected 5-manifold arising as a
// circle bundle. CONN_SUM with count 0 is S^5 (empty connected sum);
// B_CONN_SUM carries the non-spin summand B.
struct FiveManifoldType {
    enum class Kind { ConnSum, BConnSum };

    Kind kind = Kind::ConnSum;
    std::size_t s2xs3_count = 0;

    bool operator==(const FiveManifoldType&) const = default;

    std::string display() const;
    static std::string kind_name(Kind k);
};

// Raised when classification is requested for a non-primitive Euler
// class; carries the offending divisibility (0 for alpha = 0).
class NonPrimitiveError : public std::invalid_argument {
public:
    explicit NonPrimitiveError(Int divisibility);
    const Int& divisibility() const { return divisibility_; }

private:
    Int divisibility_;
};

// Requires divisibility(m, alpha) = 1. Returns B_CONN_SUM(r-2) iff the
// total space is not spin, else CONN_SUM(r-1).
FiveManifoldType classify(const FourManifold& m, const EulerClass& alpha);

// A primitive alpha with alpha = wu_class(m) mod 2; classify(m, alpha)
// is then always CONN_SUM(r-1).
EulerClass find_spin_euler_class(const FourManifold& m);

// Yields every primitive alpha with |alpha|_inf <= bound, each once, in
// lexicographic order. Restartable; next() returns nullopt when done.
class PrimitiveEnumerator {
public:
    PrimitiveEnumerator(std::size_t rank, long long bound);

    std::optional<EulerClass> next();
    void reset();

private:
    std::size_t rank_;
    long long bound_;
    std::vector<long long> current_;
    bool exhausted_ = false;

    bool advance();
};

}  // namespace cb
