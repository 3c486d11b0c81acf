#include "liederiv/rational.hpp"

#include "liederiv/errors.hpp"

#include <cctype>
#include <ostream>

namespace liederiv {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw UsageError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw UsageError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw UsageError("malformed rational: '" + std::string(text) + "'");
    }
    mpz_class p(std::string(num), 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) throw UsageError("rational with zero denominator: '" + std::string(text) + "'");
    if (text.front() == '-') p = -p;
    return Rational(p, q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw UsageError("division by zero");
    value_ /= o.value_;
    return *this;
}

void Rational::sub_mul(const Rational& f, const Rational& b) {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), f.value_.get_mpq_t(), b.value_.get_mpq_t());
    mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), tmp.get_mpq_t());
}

void Rational::add_mul(const Rational& f, const Rational& b) {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), f.value_.get_mpq_t(), b.value_.get_mpq_t());
    mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), tmp.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

bool is_zero(const Vector& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw UsageError("vector length mismatch");
    Vector r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw UsageError("vector length mismatch");
    Vector r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vector operator*(const Rational& s, const Vector& v) {
    Vector r(v);
    for (auto& x : r) x *= s;
    return r;
}

} // namespace liederiv
