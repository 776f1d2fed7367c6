#include "liecoh/exterior.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "liecoh/errors.hpp"

namespace liecoh {

namespace {

std::uint64_t mask_of(std::span<const int> indices) {
  std::uint64_t mask = 0;
  int previous = -1;
  for (int i : indices) {
    if (i <= previous || i >= 64)
      throw IndexOutOfRange("multi-index must be strictly increasing within [0, 64)");
    mask |= std::uint64_t{1} << i;
    previous = i;
  }
  return mask;
}

int lowest(std::uint64_t mask) { return std::countr_zero(mask); }

}  // namespace

MultiIndex::MultiIndex(std::initializer_list<int> indices)
    : mask_(mask_of(std::span<const int>(indices.begin(), indices.size()))) {}

MultiIndex::MultiIndex(std::span<const int> indices) : mask_(mask_of(indices)) {}

std::vector<int> MultiIndex::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(lowest(m));
  return out;
}

std::strong_ordering operator<=>(MultiIndex a, MultiIndex b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  std::uint64_t diff = a.mask_ ^ b.mask_;
  if (diff == 0) return std::strong_ordering::equal;
  // At the first differing position the smaller entry is the lowest bit of
  // the symmetric difference; the tuple holding it sorts first.
  return (a.mask_ >> lowest(diff)) & 1U ? std::strong_ordering::less
                                        : std::strong_ordering::greater;
}

int merge_sign(MultiIndex a, MultiIndex b) {
  if (a.mask() & b.mask()) return 0;
  int inversions = 0;
  for (std::uint64_t m = b.mask(); m; m &= m - 1) {
    int j = lowest(m);
    inversions += a.size() - a.rank_of(j + 1);
  }
  return inversions % 2 ? -1 : 1;
}

std::vector<MultiIndex> basis(int n, int k) {
  if (n < 0 || k < 0 || k > n || n > 64)
    throw DegreeOutOfRange("basis(" + std::to_string(n) + ", " + std::to_string(k) +
                           ") requires 0 <= k <= n");
  std::vector<MultiIndex> out;
  std::vector<int> combo(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.emplace_back(std::span<const int>(combo));
    int pos = k - 1;
    while (pos >= 0 && combo[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++combo[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i)
      combo[static_cast<std::size_t>(i)] = combo[static_cast<std::size_t>(i - 1)] + 1;
  }
  return out;
}

// ExteriorForm -------------------------------------------------------------

ExteriorForm::ExteriorForm(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 0 || dim > 64) throw IndexOutOfRange("ambient dimension outside [0, 64]");
  // Degrees above dim are allowed; such a space only holds the zero form.
  if (degree < 0) throw DegreeOutOfRange("negative form degree");
}

ExteriorForm ExteriorForm::monomial(int dim, MultiIndex index, Scalar coeff) {
  ExteriorForm w(dim, index.size());
  if (index.bound() > dim) throw IndexOutOfRange("monomial index exceeds ambient dimension");
  w.add_term(index, coeff);
  return w;
}

ExteriorForm ExteriorForm::covector(int dim, int i) {
  if (i < 0 || i >= dim) throw IndexOutOfRange("covector index outside ambient dimension");
  return monomial(dim, MultiIndex{i});
}

ExteriorForm ExteriorForm::constant(int dim, Scalar value) {
  return monomial(dim, MultiIndex{}, std::move(value));
}

ExteriorForm ExteriorForm::linear(const Vector& coords) {
  const int dim = static_cast<int>(coords.size());
  ExteriorForm w(dim, 1);
  for (int i = 0; i < dim; ++i) w.add_term(MultiIndex{i}, coords[static_cast<std::size_t>(i)]);
  return w;
}

Scalar ExteriorForm::coefficient(MultiIndex index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void ExteriorForm::add_term(MultiIndex index, const Scalar& c) {
  if (c.is_zero()) return;
  if (index.size() != degree_) throw DegreeMismatch("term degree differs from form degree");
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void ExteriorForm::check_compatible(const ExteriorForm& o) const {
  if (dim_ != o.dim_) throw DimensionMismatch("forms live over different dimensions");
  if (degree_ != o.degree_) throw DegreeMismatch("cannot add forms of different degree");
}

ExteriorForm& ExteriorForm::operator+=(const ExteriorForm& o) {
  check_compatible(o);
  for (const auto& [idx, c] : o.terms_) add_term(idx, c);
  return *this;
}

ExteriorForm& ExteriorForm::operator-=(const ExteriorForm& o) {
  check_compatible(o);
  for (const auto& [idx, c] : o.terms_) add_term(idx, -c);
  return *this;
}

ExteriorForm& ExteriorForm::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, c] : terms_) c *= s;
  return *this;
}

ExteriorForm ExteriorForm::operator-() const {
  ExteriorForm w = *this;
  for (auto& [idx, c] : w.terms_) c = -c;
  return w;
}

Vector ExteriorForm::coordinates() const {
  if (degree_ > dim_) return {};
  auto b = basis(dim_, degree_);
  Vector v(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) v[i] = coefficient(b[i]);
  return v;
}

ExteriorForm ExteriorForm::from_coordinates(int dim, int degree, const Vector& coords) {
  auto b = basis(dim, degree);
  if (coords.size() != b.size()) throw DimensionMismatch("coordinate vector has wrong length");
  ExteriorForm w(dim, degree);
  for (std::size_t i = 0; i < b.size(); ++i) w.add_term(b[i], coords[i]);
  return w;
}

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("wedge of forms over different dimensions");
  ExteriorForm out(a.dim(), a.degree() + b.degree());
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      int s = merge_sign(ia, ib);
      if (s == 0) continue;
      Scalar c = ca * cb;
      out.add_term(MultiIndex::from_mask(ia.mask() | ib.mask()), s > 0 ? c : -c);
    }
  return out;
}

ExteriorForm interior_product(int j, const ExteriorForm& w) {
  if (w.degree() == 0) throw DegreeZero("interior product of a degree-0 form");
  if (j < 0 || j >= w.dim()) throw IndexOutOfRange("contraction index outside ambient dimension");
  ExteriorForm out(w.dim(), w.degree() - 1);
  for (const auto& [idx, c] : w.terms()) {
    if (!idx.contains(j)) continue;
    out.add_term(idx.without(j), idx.rank_of(j) % 2 ? -c : c);
  }
  return out;
}

ExteriorForm interior_product(const Vector& x, const ExteriorForm& w) {
  if (static_cast<int>(x.size()) != w.dim())
    throw DimensionMismatch("contraction vector length differs from ambient dimension");
  if (w.degree() == 0) throw DegreeZero("interior product of a degree-0 form");
  ExteriorForm out(w.dim(), w.degree() - 1);
  for (int j = 0; j < w.dim(); ++j) {
    const Scalar& xj = x[static_cast<std::size_t>(j)];
    if (xj.is_zero()) continue;
    out += xj * interior_product(j, w);
  }
  return out;
}

Scalar evaluate(const ExteriorForm& w, std::span<const int> args) {
  if (static_cast<int>(args.size()) != w.degree())
    throw DegreeMismatch("argument count differs from form degree");
  // Sign of the permutation sorting args; zero on repeats.
  std::vector<int> sorted(args.begin(), args.end());
  int inversions = 0;
  for (std::size_t a = 0; a < sorted.size(); ++a)
    for (std::size_t b = a + 1; b < sorted.size(); ++b) {
      if (sorted[a] == sorted[b]) return Scalar(0);
      if (sorted[a] > sorted[b]) ++inversions;
    }
  std::sort(sorted.begin(), sorted.end());
  Scalar c = w.coefficient(MultiIndex(std::span<const int>(sorted)));
  return inversions % 2 ? -c : c;
}

// Rendering ----------------------------------------------------------------

std::vector<std::string> default_dual_names(int dim) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i) + "*");
  return names;
}

std::string render(const ExteriorForm& w, const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) < w.dim())
    throw DimensionMismatch("fewer names than basis elements");
  if (w.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [idx, c] : w.terms()) {
    std::string mono;
    for (int i : idx.indices()) {
      if (!mono.empty()) mono += '^';
      mono += names[static_cast<std::size_t>(i)];
    }
    Scalar shown = c;
    bool negative = c.is_real() && sgn(c.re()) < 0;
    if (negative) shown = -c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += shown.str();
    } else if (shown.is_one()) {
      out += mono;
    } else {
      out += shown.str() + " " + mono;
    }
  }
  return out;
}

std::string render(const ExteriorForm& w) { return render(w, default_dual_names(w.dim())); }

namespace {

class FormParser {
 public:
  FormParser(std::string_view text, const std::vector<std::string>& names) : text_(text) {
    for (std::size_t i = 0; i < names.size(); ++i) index_[names[i]] = static_cast<int>(i);
    dim_ = static_cast<int>(names.size());
  }

  ExteriorForm parse(int degree) {
    skip_spaces();
    if (rest() == "0") {
      if (degree < 0) fail("zero form needs an explicit degree");
      return ExteriorForm(dim_, degree);
    }
    std::vector<std::pair<MultiIndex, Scalar>> terms;
    bool first = true;
    while (true) {
      skip_spaces();
      if (pos_ == text_.size()) break;
      bool negative = false;
      if (!first) {
        char op = text_[pos_];
        if (op != '+' && op != '-') fail("expected '+' or '-'");
        negative = op == '-';
        ++pos_;
        skip_spaces();
      } else if (text_[pos_] == '-') {
        negative = true;
        ++pos_;
      }
      first = false;
      terms.push_back(term(negative));
    }
    if (terms.empty()) fail("empty form");
    int deg = terms.front().first.size();
    if (degree >= 0 && deg != degree) fail("degree differs from the expected one");
    ExteriorForm w(dim_, deg);
    for (auto& [idx, c] : terms) {
      if (idx.size() != deg) fail("mixed degrees");
      w.add_term(idx, c);
    }
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("invalid form '" + std::string(text_) + "': " + why);
  }

  std::string_view rest() const { return text_.substr(pos_); }

  void skip_spaces() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  std::string word() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ' ') ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::pair<MultiIndex, Scalar> term(bool negative) {
    Scalar coeff(1);
    bool have_coeff = false;
    if (pos_ < text_.size() && text_[pos_] == '(') {
      std::size_t close = text_.find(')', pos_);
      if (close == std::string_view::npos) fail("unbalanced parenthesis");
      std::string inner;
      for (char ch : text_.substr(pos_ + 1, close - pos_ - 1))
        if (ch != ' ') inner += ch;
      coeff = Scalar::parse(inner);
      pos_ = close + 1;
      have_coeff = true;
    } else if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      coeff = Scalar::parse(word());
      have_coeff = true;
    }
    if (negative) coeff = -coeff;

    skip_spaces();
    MultiIndex idx;
    bool at_operator = pos_ == text_.size() || text_[pos_] == '+' || text_[pos_] == '-';
    if (!at_operator) {
      std::string mono = word();
      std::vector<int> order;
      std::size_t start = 0;
      while (start <= mono.size()) {
        std::size_t caret = mono.find('^', start);
        std::string name = mono.substr(start, caret == std::string::npos ? std::string::npos
                                                                         : caret - start);
        auto it = index_.find(name);
        if (it == index_.end()) fail("unknown basis name '" + name + "'");
        order.push_back(it->second);
        if (caret == std::string::npos) break;
        start = caret + 1;
      }
      int inversions = 0;
      for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = a + 1; b < order.size(); ++b) {
          if (order[a] == order[b]) fail("repeated factor in monomial");
          if (order[a] > order[b]) ++inversions;
        }
      std::sort(order.begin(), order.end());
      idx = MultiIndex(std::span<const int>(order));
      if (inversions % 2) coeff = -coeff;
    } else if (!have_coeff) {
      fail("term without coefficient or monomial");
    }
    return {idx, coeff};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int dim_ = 0;
  std::unordered_map<std::string, int> index_;
};

}  // namespace

ExteriorForm parse_form(std::string_view text, const std::vector<std::string>& names, int degree) {
  return FormParser(text, names).parse(degree);
}

}  // namespace liecoh
