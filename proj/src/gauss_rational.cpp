#include "dfsub/gauss_rational.hpp"

#include "dfsub/errors.hpp"

namespace dfsub {

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero constant");
    if (o.is_real()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    mpq_class n = o.norm();
    GaussRat c = o.conj();
    *this *= c;
    re_ /= n;
    im_ /= n;
    return *this;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (sgn(q) < 0) return std::nullopt;
    mpz_class num = q.get_num();
    mpz_class den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    mpq_class r(rn, rd);
    r.canonicalize();
    return r;
}

std::optional<GaussRat> GaussRat::sqrt() const {
    if (is_zero()) return GaussRat();
    if (is_real()) {
        if (sgn(re_) > 0) {
            if (auto r = rational_sqrt(re_)) return GaussRat(*r);
            return std::nullopt;
        }
        if (auto r = rational_sqrt(-re_)) return GaussRat(mpq_class(0), *r);
        return std::nullopt;
    }
    // (p + q i)^2 = a + b i  with  p^2 = (a + |z|)/2,  q^2 = (|z| - a)/2.
    auto modulus = rational_sqrt(norm());
    if (!modulus) return std::nullopt;
    auto p = rational_sqrt((re_ + *modulus) / 2);
    auto q = rational_sqrt((*modulus - re_) / 2);
    if (!p || !q) return std::nullopt;
    mpq_class qi = sgn(im_) < 0 ? mpq_class(-*q) : *q;
    return GaussRat(*p, qi);
}

namespace {

std::string rational_text(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string imag_text(const mpq_class& q) {
    // q·i with q != 0; the sign is emitted by the caller.
    mpq_class a = abs(q);
    if (a == 1) return "i";
    return rational_text(a) + "*i";
}

}  // namespace

std::string GaussRat::to_string() const {
    if (is_real()) return rational_text(re_);
    if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag_text(im_);
    return rational_text(re_) + (sgn(im_) < 0 ? "-" : "+") + imag_text(im_);
}

}  // namespace dfsub
