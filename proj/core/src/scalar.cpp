#include "liecoh/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "liecoh/errors.hpp"

namespace liecoh {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::from_fraction(long num, long den) {
  if (den == 0) throw DivisionByZero();
  return Scalar(mpq_class(num, den));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  mpq_class n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

namespace {

std::string rational_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    if (text_.empty()) fail("empty scalar");
    mpq_class re = 0, im = 0;
    // First term: either real or imaginary.
    Term first = term(true);
    (first.imaginary ? im : re) = first.value;
    if (pos_ < text_.size()) {
      if (first.imaginary) fail("imaginary part must come last");
      Term second = term(false);
      if (!second.imaginary) fail("second term must be imaginary");
      im = second.value;
    }
    if (pos_ != text_.size()) fail("trailing characters");
    return Scalar(re, im);
  }

 private:
  struct Term {
    mpq_class value;
    bool imaginary = false;
  };

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("invalid scalar '" + std::string(text_) + "': " + why);
  }

  // A term is [sign] [rational] [i]; a leading sign is mandatory for the
  // second term.
  Term term(bool leading) {
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      negative = text_[pos_] == '-';
      ++pos_;
    } else if (!leading) {
      fail("expected '+' or '-'");
    }
    std::string digits = number();
    Term t;
    if (!digits.empty()) {
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::string den = number();
        if (den.empty()) fail("missing denominator");
        if (mpz_class(den) == 0) throw DivisionByZero();
        t.value = mpq_class(mpz_class(digits), mpz_class(den));
        t.value.canonicalize();
      } else {
        t.value = mpq_class(mpz_class(digits));
      }
    }
    if (pos_ < text_.size() && text_[pos_] == 'i') {
      ++pos_;
      t.imaginary = true;
      if (digits.empty()) t.value = 1;
    } else if (digits.empty()) {
      fail("expected a number");
    }
    if (negative) t.value = -t.value;
    return t;
  }

  std::string number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).parse(); }

std::string Scalar::str() const {
  if (is_real()) return rational_str(re_);
  std::string out = "(" + rational_str(re_);
  if (sgn(im_) < 0) {
    out += " - " + rational_str(-im_);
  } else {
    out += " + " + rational_str(im_);
  }
  return out + " i)";
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  if (a.re() != b.re()) return a.re() < b.re();
  return a.im() < b.im();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Vector zero_vector(int dim) { return Vector(static_cast<std::size_t>(dim)); }

Vector unit_vector(int dim, int i) {
  Vector v = zero_vector(dim);
  v.at(static_cast<std::size_t>(i)) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace liecoh
