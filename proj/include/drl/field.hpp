#ifndef DRL_FIELD_HPP
#define DRL_FIELD_HPP

#include <string>

#include "drl/numeric.hpp"

namespace drl {

enum class FieldKind { rational, quadratic };

/* K = Q or K = Q(sqrt d), d squarefree, d != 0, 1.  The ring of integers is
 * Z[omega] with omega = sqrt(d) for d = 2,3 mod 4 and omega = (1+sqrt(d))/2
 * for d = 1 mod 4; omega satisfies omega^2 = t*omega - n. */
class NumberField {
  public:
    NumberField() = default;  // the rational field
    static NumberField rationals();
    static NumberField quadratic(const Int& d);

    FieldKind kind() const { return kind_; }
    bool is_rational() const { return kind_ == FieldKind::rational; }
    bool is_quadratic() const { return kind_ == FieldKind::quadratic; }
    bool is_real_quadratic() const { return is_quadratic() && d_ > 0; }
    bool is_imaginary_quadratic() const { return is_quadratic() && d_ < 0; }

    const Int& d() const { return d_; }
    const Int& discriminant() const { return disc_; }
    int r1() const { return r1_; }
    int r2() const { return r2_; }
    int real_places() const { return r1_; }

    /* omega^2 = omega_trace * omega - omega_norm (0 for the rational field). */
    const Int& omega_trace() const { return t_; }
    const Int& omega_norm() const { return n_; }

    bool operator==(const NumberField& o) const {
        return kind_ == o.kind_ && d_ == o.d_;
    }
    bool operator!=(const NumberField& o) const { return !(*this == o); }

    std::string str() const;

  private:
    FieldKind kind_ = FieldKind::rational;
    Int d_ = 0, disc_ = 1, t_ = 0, n_ = 0;
    int r1_ = 1, r2_ = 0;
};

/* x + y*omega with exact rational coordinates. */
class FieldElement {
  public:
    FieldElement(const NumberField& k, const Rat& x, const Rat& y);
    static FieldElement integer(const NumberField& k, const Int& v) {
        return FieldElement(k, Rat(v), Rat(0));
    }
    static FieldElement zero(const NumberField& k) { return integer(k, 0); }
    static FieldElement one(const NumberField& k) { return integer(k, 1); }

    const NumberField& field() const { return field_; }
    const Rat& x() const { return x_; }
    const Rat& y() const { return y_; }

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool is_one() const { return x_ == 1 && y_ == 0; }
    bool is_integral() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement conj() const;

    Rat norm() const;
    Rat trace() const;

    /* Sign (+1/-1) of the image under the i-th real embedding, 0-based.
     * Place 0 sends sqrt(d) to the positive root, place 1 to the negative. */
    int sign_at(int place) const;

    bool operator==(const FieldElement& o) const {
        return field_ == o.field_ && x_ == o.x_ && y_ == o.y_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string str() const;

  private:
    NumberField field_;
    Rat x_, y_;
};

}  // namespace drl

#endif
