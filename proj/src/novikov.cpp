#include "floertori/novikov.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "floertori/errors.hpp"

namespace floertori {

namespace {

bool key_less(const NovikovTerm& a, const NovikovTerm& b) {
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    return a.n < b.n;
}

// Sort by (lambda, n), merge equal keys, drop zero coefficients.
std::vector<NovikovTerm> canonicalize(std::vector<NovikovTerm> terms) {
    std::sort(terms.begin(), terms.end(), key_less);
    std::vector<NovikovTerm> out;
    for (const auto& t : terms) {
        if (!out.empty() && out.back().lambda == t.lambda && out.back().n == t.n) {
            out.back().coeff = out.back().coeff + t.coeff;
        } else {
            out.push_back(t);
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const NovikovTerm& t) { return t.coeff.is_zero(); }),
              out.end());
    return out;
}

}  // namespace

NovikovElement::NovikovElement(std::vector<NovikovTerm> terms)
    : terms_(canonicalize(std::move(terms))) {}

NovikovElement NovikovElement::one() {
    return monomial(Rational(1), Rational(0), 0);
}

NovikovElement NovikovElement::monomial(const Rational& coeff, const Rational& lambda,
                                        long long n) {
    return NovikovElement(std::vector<NovikovTerm>{NovikovTerm{coeff, lambda, n}});
}

bool NovikovElement::operator==(const NovikovElement& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coeff != o.terms_[i].coeff) return false;
        if (terms_[i].lambda != o.terms_[i].lambda) return false;
        if (terms_[i].n != o.terms_[i].n) return false;
    }
    return true;
}

std::string NovikovElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << t.coeff.to_string() << "*T^" << t.lambda.to_string() << "*e^" << t.n;
    }
    return os.str();
}

NovikovElement add(const NovikovElement& x, const NovikovElement& y) {
    std::vector<NovikovTerm> terms = x.terms();
    terms.insert(terms.end(), y.terms().begin(), y.terms().end());
    return NovikovElement(std::move(terms));
}

NovikovElement mul(const NovikovElement& x, const NovikovElement& y) {
    std::vector<NovikovTerm> terms;
    terms.reserve(x.terms().size() * y.terms().size());
    for (const auto& a : x.terms()) {
        for (const auto& b : y.terms()) {
            NovikovTerm t;
            t.coeff = a.coeff * b.coeff;
            t.lambda = a.lambda + b.lambda;
            if (__builtin_add_overflow(a.n, b.n, &t.n))
                throw OverflowError("exponent overflow in Novikov product");
            terms.push_back(t);
        }
    }
    return NovikovElement(std::move(terms));
}

NovikovElement neg(const NovikovElement& x) {
    std::vector<NovikovTerm> terms = x.terms();
    for (auto& t : terms) t.coeff = -t.coeff;
    return NovikovElement(std::move(terms));
}

DegreeResult degree(const NovikovElement& x) {
    if (x.is_zero()) return DegreeResult::zero();
    const long long n0 = x.terms().front().n;
    for (const auto& t : x.terms())
        if (t.n != n0) return DegreeResult::not_homogeneous();
    return DegreeResult::homogeneous(2 * n0);
}

FiltrationParam::FiltrationParam(Rational lambda_star) : lambda_star_(lambda_star) {
    if (!(Rational(0) < lambda_star_))
        throw DomainError("filtration scale must be positive");
}

std::optional<long long> filtration_level(const NovikovElement& x, const FiltrationParam& p) {
    if (x.is_zero()) return std::nullopt;
    // Terms are sorted by lambda, so the minimum is the first one.
    Rational min_lambda = x.terms().front().lambda;
    return (min_lambda / p.lambda_star()).floor();
}

NovikovElement graded_piece(const NovikovElement& x, long long q, const FiltrationParam& p) {
    const Rational lo = p.lambda_star() * Rational(q);
    const Rational hi = p.lambda_star() * Rational(q + 1);
    std::vector<NovikovTerm> kept;
    for (const auto& t : x.terms())
        if (!(t.lambda < lo) && t.lambda < hi) kept.push_back(t);
    return NovikovElement(std::move(kept));
}

GradedModule::GradedModule(std::vector<long long> ranks) : ranks_(std::move(ranks)) {
    for (long long r : ranks_)
        if (r < 0) throw DomainError("graded module ranks must be non-negative");
    while (!ranks_.empty() && ranks_.back() == 0) ranks_.pop_back();
}

long long GradedModule::total_rank() const {
    long long s = 0;
    for (long long r : ranks_) s += r;
    return s;
}

std::string GradedModule::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
        if (i) os << ",";
        os << ranks_[i];
    }
    os << ")";
    return os.str();
}

bool module_iso(const GradedModule& m1, const GradedModule& m2) {
    return m1 == m2;
}

long long euler_characteristic(const GradedModule& m) {
    long long chi = 0;
    for (std::size_t i = 0; i < m.ranks().size(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * m.ranks()[i];
    return chi;
}

}  // namespace floertori
