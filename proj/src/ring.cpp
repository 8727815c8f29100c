#include "sylrank/ring.hpp"

#include "cursor.hpp"
#include "sylrank/error.hpp"

namespace sylrank {

namespace {

const Integer& as_integer(const Scalar& a) { return std::get<Integer>(a.rep); }
const Rational& as_rational(const Scalar& a) { return std::get<Rational>(a.rep); }
const std::vector<Scalar>& as_vector(const Scalar& a) { return std::get<std::vector<Scalar>>(a.rep); }

Integer reduce(const Integer& x, const Integer& n) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace

bool is_prime(const Integer& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

Ring Ring::integers() { return Ring{}; }

Ring Ring::rationals() {
  Ring r;
  r.kind_ = RingKind::Rationals;
  return r;
}

Ring Ring::prime_field(const Integer& p) {
  if (!is_prime(p)) throw Error("Fp requires a prime, got " + p.get_str());
  Ring r;
  r.kind_ = RingKind::PrimeField;
  r.modulus_ = p;
  return r;
}

Ring Ring::integers_mod(const Integer& n) {
  if (n < 2) throw Error("Zmod requires n >= 2, got " + n.get_str());
  Ring r;
  r.kind_ = RingKind::IntegersMod;
  r.modulus_ = n;
  return r;
}

Ring Ring::group_algebra(const Ring& base, const FiniteGroup& group) {
  if (!base.is_field()) throw Error("group algebra base must be Q or Fp, got " + base.name());
  Ring r;
  r.kind_ = RingKind::GroupAlgebra;
  r.base_ = std::make_shared<const Ring>(base);
  r.group_ = std::make_shared<const FiniteGroup>(group);
  return r;
}

Ring Ring::matrix_amplification(const Ring& base, std::size_t k) {
  if (k == 0) throw Error("matrix amplification degree must be >= 1");
  Ring r;
  r.kind_ = RingKind::MatrixAmplification;
  r.base_ = std::make_shared<const Ring>(base);
  r.degree_ = k;
  return r;
}

const Ring& Ring::base() const {
  if (!base_) throw Error(name() + " has no base ring");
  return *base_;
}

const FiniteGroup& Ring::group() const {
  if (!group_) throw Error(name() + " is not a group algebra");
  return *group_;
}

bool Ring::is_finite() const {
  switch (kind_) {
    case RingKind::PrimeField:
    case RingKind::IntegersMod:
      return true;
    case RingKind::GroupAlgebra:
    case RingKind::MatrixAmplification:
      return base_->is_finite();
    default:
      return false;
  }
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::Integers:
      return "Z";
    case RingKind::Rationals:
      return "Q";
    case RingKind::PrimeField:
      return "Fp(" + modulus_.get_str() + ")";
    case RingKind::IntegersMod:
      return "Zmod(" + modulus_.get_str() + ")";
    case RingKind::GroupAlgebra:
      return "GroupRing(" + base_->name() + "," + group_->name() + ")";
    case RingKind::MatrixAmplification:
      return "Mat(" + base_->name() + "," + std::to_string(degree_) + ")";
  }
  return "?";
}

bool Ring::operator==(const Ring& other) const {
  if (kind_ != other.kind_ || modulus_ != other.modulus_ || degree_ != other.degree_) return false;
  if (base_ && !(*base_ == *other.base_)) return false;
  if (group_ && !(*group_ == *other.group_)) return false;
  return true;
}

Scalar Ring::zero() const { return from_int(0); }
Scalar Ring::one() const { return from_int(1); }

Scalar Ring::from_integer(const Integer& value) const {
  switch (kind_) {
    case RingKind::Integers:
      return Scalar{value};
    case RingKind::Rationals:
      return Scalar{Rational(value)};
    case RingKind::PrimeField:
    case RingKind::IntegersMod:
      return Scalar{reduce(value, modulus_)};
    case RingKind::GroupAlgebra: {
      std::vector<Scalar> coeffs(group_->order(), base_->zero());
      coeffs[group_->identity()] = base_->from_integer(value);
      return Scalar{std::move(coeffs)};
    }
    case RingKind::MatrixAmplification: {
      std::vector<Scalar> entries(degree_ * degree_, base_->zero());
      for (std::size_t i = 0; i < degree_; ++i) entries[i * degree_ + i] = base_->from_integer(value);
      return Scalar{std::move(entries)};
    }
  }
  throw Error("unreachable ring kind");
}

Scalar Ring::add(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case RingKind::Integers:
      return Scalar{Integer(as_integer(a) + as_integer(b))};
    case RingKind::Rationals:
      return Scalar{Rational(as_rational(a) + as_rational(b))};
    case RingKind::PrimeField:
    case RingKind::IntegersMod: {
      Integer s = as_integer(a) + as_integer(b);
      if (s >= modulus_) s -= modulus_;
      return Scalar{std::move(s)};
    }
    default: {
      const auto& x = as_vector(a);
      const auto& y = as_vector(b);
      std::vector<Scalar> out(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) out[i] = base_->add(x[i], y[i]);
      return Scalar{std::move(out)};
    }
  }
}

Scalar Ring::neg(const Scalar& a) const {
  switch (kind_) {
    case RingKind::Integers:
      return Scalar{Integer(-as_integer(a))};
    case RingKind::Rationals:
      return Scalar{Rational(-as_rational(a))};
    case RingKind::PrimeField:
    case RingKind::IntegersMod: {
      const Integer& x = as_integer(a);
      return Scalar{x == 0 ? Integer(0) : Integer(modulus_ - x)};
    }
    default: {
      const auto& x = as_vector(a);
      std::vector<Scalar> out(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) out[i] = base_->neg(x[i]);
      return Scalar{std::move(out)};
    }
  }
}

Scalar Ring::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Ring::mul(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case RingKind::Integers:
      return Scalar{Integer(as_integer(a) * as_integer(b))};
    case RingKind::Rationals:
      return Scalar{Rational(as_rational(a) * as_rational(b))};
    case RingKind::PrimeField:
    case RingKind::IntegersMod:
      return Scalar{reduce(as_integer(a) * as_integer(b), modulus_)};
    case RingKind::GroupAlgebra: {
      const auto& x = as_vector(a);
      const auto& y = as_vector(b);
      std::vector<Scalar> out(x.size(), base_->zero());
      for (std::size_t s = 0; s < x.size(); ++s) {
        if (base_->is_zero(x[s])) continue;
        for (std::size_t t = 0; t < y.size(); ++t) {
          if (base_->is_zero(y[t])) continue;
          auto& slot = out[group_->mul(s, t)];
          slot = base_->add(slot, base_->mul(x[s], y[t]));
        }
      }
      return Scalar{std::move(out)};
    }
    case RingKind::MatrixAmplification: {
      const auto& x = as_vector(a);
      const auto& y = as_vector(b);
      const std::size_t k = degree_;
      std::vector<Scalar> out(k * k, base_->zero());
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
          if (base_->is_zero(x[i * k + l])) continue;
          for (std::size_t j = 0; j < k; ++j) {
            out[i * k + j] = base_->add(out[i * k + j], base_->mul(x[i * k + l], y[l * k + j]));
          }
        }
      }
      return Scalar{std::move(out)};
    }
  }
  throw Error("unreachable ring kind");
}

bool Ring::is_zero(const Scalar& a) const {
  switch (kind_) {
    case RingKind::Integers:
    case RingKind::PrimeField:
    case RingKind::IntegersMod:
      return as_integer(a) == 0;
    case RingKind::Rationals:
      return as_rational(a) == 0;
    default:
      for (const auto& c : as_vector(a)) {
        if (!base_->is_zero(c)) return false;
      }
      return true;
  }
}

std::optional<Scalar> Ring::inverse(const Scalar& a) const {
  if (is_zero(a)) return std::nullopt;
  if (kind_ == RingKind::Rationals) return Scalar{Rational(1 / as_rational(a))};
  if (kind_ == RingKind::PrimeField) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), as_integer(a).get_mpz_t(), modulus_.get_mpz_t());
    return Scalar{std::move(inv)};
  }
  throw Error("inverse requested in non-field " + name());
}

Scalar Ring::normalize(Scalar a) const {
  switch (kind_) {
    case RingKind::Integers:
      if (!std::holds_alternative<Integer>(a.rep)) throw Error("expected integer scalar");
      return a;
    case RingKind::Rationals:
      if (std::holds_alternative<Integer>(a.rep)) return Scalar{Rational(as_integer(a))};
      std::get<Rational>(a.rep).canonicalize();
      return a;
    case RingKind::PrimeField:
    case RingKind::IntegersMod:
      return Scalar{reduce(as_integer(a), modulus_)};
    default: {
      auto v = as_vector(a);
      for (auto& c : v) c = base_->normalize(std::move(c));
      return Scalar{std::move(v)};
    }
  }
}

std::string Ring::format(const Scalar& a) const {
  switch (kind_) {
    case RingKind::Integers:
    case RingKind::PrimeField:
    case RingKind::IntegersMod:
      return as_integer(a).get_str();
    case RingKind::Rationals:
      return as_rational(a).get_str();
    case RingKind::GroupAlgebra: {
      std::string out;
      const auto& c = as_vector(a);
      for (std::size_t g = 0; g < c.size(); ++g) {
        if (base_->is_zero(c[g])) continue;
        std::string coeff = base_->format(c[g]);
        if (!out.empty() && coeff[0] != '-') out += '+';
        out += coeff + "*g" + std::to_string(g);
      }
      return out.empty() ? "0" : out;
    }
    case RingKind::MatrixAmplification: {
      const auto& e = as_vector(a);
      std::string out = "[";
      for (std::size_t i = 0; i < degree_; ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < degree_; ++j) {
          if (j) out += ',';
          out += base_->format(e[i * degree_ + j]);
        }
        out += ']';
      }
      return out + "]";
    }
  }
  return "?";
}

namespace {

Scalar parse_with(const Ring& ring, detail::Cursor& cur);

Scalar parse_group_element(const Ring& ring, detail::Cursor& cur) {
  const Ring& base = ring.base();
  const FiniteGroup& group = ring.group();
  std::vector<Scalar> coeffs(group.order(), base.zero());
  bool first = true;
  while (!cur.done()) {
    bool negative = false;
    if (cur.accept('+')) {
    } else if (cur.accept('-')) {
      negative = true;
    } else if (!first) {
      cur.fail("expected '+' or '-' between group-algebra terms");
    }
    first = false;

    Scalar coeff = base.one();
    std::size_t index = group.identity();
    if (cur.peek() == 'g') {
      cur.accept('g');
      index = cur.count();
    } else {
      Rational q = cur.rational();
      coeff = base.kind() == RingKind::Rationals ? Scalar{q} : base.from_integer(q.get_num());
      if (base.kind() == RingKind::PrimeField && q.get_den() != 1) {
        if (base.is_zero(base.from_integer(q.get_den()))) cur.fail("denominator divisible by the characteristic");
        coeff = base.mul(coeff, *base.inverse(base.from_integer(q.get_den())));
      }
      if (cur.accept('*')) {
        if (!cur.accept('g')) cur.fail("expected group element 'g<index>'");
        index = cur.count();
      }
    }
    if (index >= group.order()) cur.fail("group element index out of range");
    if (negative) coeff = base.neg(coeff);
    coeffs[index] = base.add(coeffs[index], coeff);
  }
  if (first) cur.fail("empty group-algebra element");
  return Scalar{std::move(coeffs)};
}

Scalar parse_amplified(const Ring& ring, detail::Cursor& cur) {
  const std::size_t k = ring.degree();
  std::vector<Scalar> entries;
  cur.expect('[');
  for (std::size_t i = 0; i < k; ++i) {
    if (i) cur.expect(',');
    cur.expect('[');
    for (std::size_t j = 0; j < k; ++j) {
      if (j) cur.expect(',');
      std::size_t col = cur.column();
      std::string_view piece = cur.balanced_until(",]");
      detail::Cursor inner(piece, cur.line(), col);
      entries.push_back(parse_with(ring.base(), inner));
    }
    cur.expect(']');
  }
  cur.expect(']');
  return Scalar{std::move(entries)};
}

Scalar parse_with(const Ring& ring, detail::Cursor& cur) {
  Scalar out;
  switch (ring.kind()) {
    case RingKind::Integers:
      out = Scalar{cur.integer()};
      break;
    case RingKind::Rationals:
      out = Scalar{cur.rational()};
      break;
    case RingKind::IntegersMod:
      out = ring.from_integer(cur.integer());
      break;
    case RingKind::PrimeField: {
      Rational q = cur.rational();
      if (ring.is_zero(ring.from_integer(q.get_den()))) cur.fail("denominator divisible by the characteristic");
      out = ring.mul(ring.from_integer(q.get_num()), *ring.inverse(ring.from_integer(q.get_den())));
      break;
    }
    case RingKind::GroupAlgebra:
      return parse_group_element(ring, cur);
    case RingKind::MatrixAmplification:
      out = parse_amplified(ring, cur);
      break;
  }
  cur.expect_end();
  return out;
}

}  // namespace

Scalar Ring::parse(std::string_view text, std::size_t line, std::size_t column) const {
  detail::Cursor cur(text, line, column);
  if (cur.done()) cur.fail("empty scalar");
  return parse_with(*this, cur);
}

}  // namespace sylrank
