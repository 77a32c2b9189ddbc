#include "drl/field.hpp"

namespace drl {

NumberField NumberField::rationals() {
    NumberField k;
    k.kind_ = FieldKind::rational;
    k.d_ = 0;
    k.disc_ = 1;
    k.t_ = 0;
    k.n_ = 0;
    k.r1_ = 1;
    k.r2_ = 0;
    return k;
}

NumberField NumberField::quadratic(const Int& d) {
    if (d == 0 || d == 1)
        throw validation_error("quadratic field: d must not be 0 or 1");
    if (!is_squarefree(d))
        throw validation_error("quadratic field: d = " + d.get_str() +
                               " is not squarefree");
    NumberField k;
    k.kind_ = FieldKind::quadratic;
    k.d_ = d;
    if (mod_floor(d, 4) == 1) {
        k.disc_ = d;
        k.t_ = 1;
        k.n_ = (1 - d) / 4;
    } else {
        k.disc_ = 4 * d;
        k.t_ = 0;
        k.n_ = -d;
    }
    if (d > 0) {
        k.r1_ = 2;
        k.r2_ = 0;
    } else {
        k.r1_ = 0;
        k.r2_ = 1;
    }
    return k;
}

std::string NumberField::str() const {
    if (is_rational()) return "Q";
    if (d_ == -1) return "Q(i)";
    return "Q(sqrt " + d_.get_str() + ")";
}

static void require_same_field(const NumberField& a, const NumberField& b) {
    if (a != b) throw validation_error("field elements from different fields");
}

static Rat make_canonical(Rat r) {
    r.canonicalize();
    return r;
}

FieldElement::FieldElement(const NumberField& k, const Rat& x, const Rat& y)
    : field_(k), x_(make_canonical(x)), y_(make_canonical(y)) {
    if (k.is_rational() && y_ != 0)
        throw validation_error("rational field element with omega component");
}

bool FieldElement::is_integral() const {
    return x_.get_den() == 1 && y_.get_den() == 1;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(field_, o.field_);
    return FieldElement(field_, x_ + o.x_, y_ + o.y_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_field(field_, o.field_);
    return FieldElement(field_, x_ - o.x_, y_ - o.y_);
}

FieldElement FieldElement::operator-() const {
    return FieldElement(field_, -x_, -y_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(field_, o.field_);
    Rat t(field_.omega_trace()), n(field_.omega_norm());
    Rat yy = y_ * o.y_;
    return FieldElement(field_, x_ * o.x_ - n * yy,
                        x_ * o.y_ + y_ * o.x_ + t * yy);
}

FieldElement FieldElement::conj() const {
    Rat t(field_.omega_trace());
    return FieldElement(field_, x_ + t * y_, -y_);
}

Rat FieldElement::norm() const {
    Rat t(field_.omega_trace()), n(field_.omega_norm());
    if (field_.is_rational()) return x_;
    return x_ * x_ + t * x_ * y_ + n * y_ * y_;
}

Rat FieldElement::trace() const {
    if (field_.is_rational()) return 2 * x_;
    return 2 * x_ + Rat(field_.omega_trace()) * y_;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw validation_error("inverse of zero");
    if (field_.is_rational()) return FieldElement(field_, 1 / x_, Rat(0));
    FieldElement c = conj();
    Rat n = norm();
    return FieldElement(field_, c.x() / n, c.y() / n);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return (*this) * o.inverse();
}

int FieldElement::sign_at(int place) const {
    if (place < 0 || place >= field_.real_places())
        throw validation_error("sign_at: no such real place");
    if (is_zero()) return 0;
    if (field_.is_rational()) return sgn(x_) >= 0 ? 1 : -1;
    // sigma(x + y*omega) = (A + s*B*sqrt(D)) / 2 with A = 2x + t*y, B = y.
    Rat A = 2 * x_ + Rat(field_.omega_trace()) * y_;
    Rat B = (place == 0) ? y_ : Rat(-y_);
    int sa = sgn(A), sb = sgn(B);
    if (sb == 0) return sa > 0 ? 1 : -1;
    if (sa == 0) return sb > 0 ? 1 : -1;
    if (sa == sb) return sa;
    // Mixed signs: compare A^2 with B^2 * D (D nonsquare, no ties).
    Rat lhs = A * A, rhs = B * B * Rat(field_.discriminant());
    if (sa > 0) return lhs > rhs ? 1 : -1;
    return lhs > rhs ? -1 : 1;
}

std::string FieldElement::str() const {
    if (field_.is_rational() || y_ == 0) return x_.get_str();
    std::string s;
    if (x_ != 0) s += x_.get_str() + " + ";
    if (y_ == 1)
        s += "w";
    else
        s += y_.get_str() + "*w";
    return s;
}

}  // namespace drl
