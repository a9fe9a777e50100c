#pragma once

#include <optional>
#include <string>
#include <vector>

#include "floertori/rational.hpp"

namespace floertori {

// One term a * T^lambda * e^n of the universal Novikov ring. The T
// exponent tracks the action (area) filtration, the e exponent carries
// the grading deg T^lambda e^n = 2n.
struct NovikovTerm {
    Rational coeff;
    Rational lambda;
    long long n = 0;
};

// Exact element of the universal Novikov ring: a finite formal sum of
// terms, kept canonical (sorted by (lambda, n), keys unique, no zero
// coefficients). Finiteness of {i : lambda_i <= lambda*} is automatic
// for finite term lists.
class NovikovElement {
public:
    NovikovElement() = default;  // zero
    explicit NovikovElement(std::vector<NovikovTerm> terms);

    static NovikovElement one();
    static NovikovElement monomial(const Rational& coeff, const Rational& lambda, long long n);

    const std::vector<NovikovTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const NovikovElement& o) const;
    bool operator!=(const NovikovElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::vector<NovikovTerm> terms_;
};

NovikovElement add(const NovikovElement& x, const NovikovElement& y);
NovikovElement mul(const NovikovElement& x, const NovikovElement& y);
NovikovElement neg(const NovikovElement& x);

// Grading by deg T^lambda e^n = 2n.
struct DegreeResult {
    enum class Kind { Homogeneous, NotHomogeneous, ZeroElement };
    Kind kind = Kind::ZeroElement;
    long long value = 0;  // meaningful only when Homogeneous

    static DegreeResult homogeneous(long long degree) {
        return DegreeResult{Kind::Homogeneous, degree};
    }
    static DegreeResult not_homogeneous() { return DegreeResult{Kind::NotHomogeneous, 0}; }
    static DegreeResult zero() { return DegreeResult{Kind::ZeroElement, 0}; }
};

DegreeResult degree(const NovikovElement& x);

// The scale lambda* > 0 turning the R+ action filtration
// F^lambda = {terms with lambda_i >= lambda} into a Z filtration
// via level q <-> F^(q lambda*).
class FiltrationParam {
public:
    explicit FiltrationParam(Rational lambda_star);

    const Rational& lambda_star() const { return lambda_star_; }

private:
    Rational lambda_star_;
};

// Largest q with x in the level-q piece of the Z filtration, i.e.
// floor(min_i lambda_i / lambda*). nullopt for the zero element, which
// lies in every level.
std::optional<long long> filtration_level(const NovikovElement& x, const FiltrationParam& p);

// The sub-sum of terms with q*lambda* <= lambda_i < (q+1)*lambda*,
// representing x's class in the level-q graded piece.
NovikovElement graded_piece(const NovikovElement& x, long long q, const FiltrationParam& p);

// Free graded module over the Novikov ring, recorded as the vector of
// generator counts per cohomological degree (trailing zeros trimmed).
class GradedModule {
public:
    GradedModule() = default;
    explicit GradedModule(std::vector<long long> ranks);

    const std::vector<long long>& ranks() const { return ranks_; }
    long long rank(std::size_t degree) const {
        return degree < ranks_.size() ? ranks_[degree] : 0;
    }
    long long total_rank() const;

    bool operator==(const GradedModule& o) const { return ranks_ == o.ranks_; }
    bool operator!=(const GradedModule& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::vector<long long> ranks_;
};

// Free graded modules are isomorphic exactly when the rank vectors agree.
bool module_iso(const GradedModule& m1, const GradedModule& m2);

long long euler_characteristic(const GradedModule& m);

}  // namespace floertori
