#include "hilbres/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include "hilbres/kernels.hpp"

namespace hilbres {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw ParseError("empty rational");
  if (s.front() == '+') s.erase(s.begin());
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational '" + std::string(text) + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------
// VariableContext

ContextPtr VariableContext::make(ContextSpec spec) {
  auto ctx = std::shared_ptr<VariableContext>(new VariableContext());
  if (!spec.weights.empty() && spec.weights.size() != spec.residue_vars.size())
    throw std::invalid_argument("weights must match residue variables");
  for (std::size_t i = 1; i < spec.weights.size(); ++i)
    if (spec.weights[i] < spec.weights[i - 1])
      throw std::invalid_argument("weights must be weakly increasing in expansion order");
  for (int w : spec.weights)
    if (w <= 0) throw std::invalid_argument("weights must be positive");

  for (std::size_t i = 0; i < spec.residue_vars.size(); ++i) {
    Variable v{spec.residue_vars[i], VarKind::residue, 1, std::nullopt};
    if (!spec.weights.empty()) v.weight = spec.weights[i];
    ctx->vars_.push_back(std::move(v));
  }
  for (const auto& [name, deg] : spec.geometry_symbols) {
    if (deg < 0) throw std::invalid_argument("negative degree for symbol " + name);
    ctx->vars_.push_back(Variable{name, VarKind::geometry, deg, std::nullopt});
  }
  for (std::size_t i = 0; i < ctx->vars_.size(); ++i) {
    const auto& n = ctx->vars_[i].name;
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
      throw std::invalid_argument("bad identifier '" + n + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (ctx->vars_[j].name == n) throw std::invalid_argument("duplicate variable " + n);
  }
  ctx->num_residue_ = spec.residue_vars.size();
  ctx->cap_ = spec.geometry_cap;
  ctx->spec_ = std::move(spec);
  return ctx;
}

std::optional<std::size_t> VariableContext::find(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::size_t VariableContext::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw std::out_of_range("unknown variable '" + std::string(name) + "'");
}

bool VariableContext::same_as(const VariableContext& other) const {
  if (this == &other) return true;
  if (vars_.size() != other.vars_.size() || num_residue_ != other.num_residue_ ||
      cap_ != other.cap_)
    return false;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto& a = vars_[i];
    const auto& b = other.vars_[i];
    if (a.name != b.name || a.kind != b.kind || a.degree != b.degree || a.weight != b.weight)
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(std::size_t var, int exp) {
  Monomial m;
  if (exp != 0) m.entries_.push_back({static_cast<std::uint32_t>(var), exp});
  return m;
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.var < b.var; });
  Monomial m;
  for (const auto& e : entries) {
    if (!m.entries_.empty() && m.entries_.back().var == e.var)
      m.entries_.back().exp += e.exp;
    else
      m.entries_.push_back(e);
  }
  std::erase_if(m.entries_, [](const Entry& e) { return e.exp == 0; });
  return m;
}

int Monomial::exponent(std::size_t var) const {
  for (const auto& e : entries_) {
    if (e.var == var) return e.exp;
    if (e.var > var) break;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.entries_.reserve(entries_.size() + other.entries_.size());
  auto i = entries_.begin();
  auto j = other.entries_.begin();
  while (i != entries_.end() || j != other.entries_.end()) {
    if (j == other.entries_.end() || (i != entries_.end() && i->var < j->var)) {
      r.entries_.push_back(*i++);
    } else if (i == entries_.end() || j->var < i->var) {
      r.entries_.push_back(*j++);
    } else {
      int e = i->exp + j->exp;
      if (e != 0) r.entries_.push_back({i->var, e});
      ++i;
      ++j;
    }
  }
  return r;
}

Monomial Monomial::without(std::size_t var) const {
  Monomial r;
  r.entries_.reserve(entries_.size());
  for (const auto& e : entries_)
    if (e.var != var) r.entries_.push_back(e);
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& e : entries_) {
    std::size_t v = (static_cast<std::size_t>(e.var) << 32) ^
                    static_cast<std::uint32_t>(e.exp);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

int compare_canonical(const Monomial& a, const Monomial& b) {
  auto ea = a.entries();
  auto eb = b.entries();
  std::size_t i = 0, j = 0;
  while (i < ea.size() || j < eb.size()) {
    std::uint32_t va = i < ea.size() ? ea[i].var : UINT32_MAX;
    std::uint32_t vb = j < eb.size() ? eb[j].var : UINT32_MAX;
    std::uint32_t v = std::min(va, vb);
    int xa = va == v ? ea[i].exp : 0;
    int xb = vb == v ? eb[j].exp : 0;
    if (xa != xb) return xa > xb ? -1 : 1;
    if (va == v) ++i;
    if (vb == v) ++j;
  }
  return 0;
}

int geometry_degree(const VariableContext& ctx, const Monomial& m) {
  int d = 0;
  for (const auto& e : m.entries())
    if (!ctx.is_residue(e.var)) d += e.exp * ctx[e.var].degree;
  return d;
}

bool exceeds_cap(const VariableContext& ctx, const Monomial& m) {
  auto cap = ctx.geometry_cap();
  return cap && geometry_degree(ctx, m) > *cap;
}

std::string to_string(const VariableContext& ctx, const Monomial& m) {
  std::string out;
  for (const auto& e : m.entries()) {
    if (!out.empty()) out += '*';
    out += ctx[e.var].name;
    if (e.exp != 1) out += "^" + std::to_string(e.exp);
  }
  return out;
}

// ---------------------------------------------------------------------------
// MPoly

MPoly::MPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("null context");
}

MPoly::MPoly(ContextPtr ctx, const Rational& constant) : MPoly(std::move(ctx)) {
  if (sgn(constant) != 0) terms_.push_back({Monomial{}, constant});
}

MPoly MPoly::from_terms(ContextPtr ctx, std::vector<Term> terms) {
  MPoly p(std::move(ctx));
  std::erase_if(terms, [&](const Term& t) { return exceeds_cap(*p.ctx_, t.mono); });
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare_canonical(a.mono, b.mono) < 0;
  });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
  return p;
}

MPoly MPoly::variable(ContextPtr ctx, std::size_t var, int exp) {
  if (var >= ctx->size()) throw std::out_of_range("variable index out of range");
  if (exp < 0 && !ctx->is_residue(var))
    throw std::invalid_argument("geometry symbols take non-negative exponents");
  return monomial(std::move(ctx), Monomial::of(var, exp), Rational(1));
}

MPoly MPoly::variable(ContextPtr ctx, std::string_view name, int exp) {
  auto i = ctx->index(name);
  return variable(std::move(ctx), i, exp);
}

MPoly MPoly::monomial(ContextPtr ctx, Monomial mono, const Rational& coeff) {
  std::vector<Term> t;
  t.push_back({std::move(mono), coeff});
  return from_terms(std::move(ctx), std::move(t));
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational MPoly::constant_term() const {
  for (const auto& t : terms_)
    if (t.mono.is_one()) return t.coeff;
  return Rational(0);
}

void MPoly::check_same(const MPoly& other) const {
  if (ctx_ != other.ctx_ && !ctx_->same_as(*other.ctx_))
    throw ContextMismatch("polynomials belong to different variable contexts");
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& other) {
  check_same(other);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    int c = i == terms_.end() ? 1 : j == other.terms_.end() ? -1 : compare_canonical(i->mono, j->mono);
    if (c < 0) {
      merged.push_back(std::move(*i++));
    } else if (c > 0) {
      merged.push_back(*j++);
    } else {
      Rational s = i->coeff + j->coeff;
      if (sgn(s) != 0) merged.push_back({std::move(i->mono), s});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) { return *this += -other; }

MPoly& MPoly::operator*=(const MPoly& other) {
  *this = multiply_serial(*this, other);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= scalar;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) { return multiply_serial(a, b); }

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.ctx_ != b.ctx_ && !a.ctx_->same_as(*b.ctx_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

MPoly MPoly::pow(unsigned n) const {
  MPoly result(ctx_, Rational(1));
  MPoly base = *this;
  while (n > 0) {
    if (n & 1U) result = multiply_serial(result, base);
    n >>= 1U;
    if (n > 0) base = multiply_serial(base, base);
  }
  return result;
}

std::optional<int> MPoly::max_exponent(std::size_t var) const {
  std::optional<int> best;
  for (const auto& t : terms_) {
    int e = t.mono.exponent(var);
    if (!best || e > *best) best = e;
  }
  return best;
}

std::optional<int> MPoly::min_exponent(std::size_t var) const {
  std::optional<int> best;
  for (const auto& t : terms_) {
    int e = t.mono.exponent(var);
    if (!best || e < *best) best = e;
  }
  return best;
}

bool MPoly::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.exponent(var) != 0; });
}

bool MPoly::has_residue_variables() const {
  for (const auto& t : terms_)
    for (const auto& e : t.mono.entries())
      if (ctx_->is_residue(e.var)) return true;
  return false;
}

MPoly MPoly::coefficient_of(std::size_t var, int exp) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.mono.exponent(var) == exp) out.push_back({t.mono.without(var), t.coeff});
  return from_terms(ctx_, std::move(out));
}

MPoly MPoly::drop_below(std::size_t var, int min_exp) const {
  MPoly r(ctx_);
  for (const auto& t : terms_)
    if (t.mono.exponent(var) >= min_exp) r.terms_.push_back(t);
  return r;
}

MPoly MPoly::geometry_part(int deg) const {
  MPoly r(ctx_);
  for (const auto& t : terms_)
    if (geometry_degree(*ctx_, t.mono) == deg) r.terms_.push_back(t);
  return r;
}

MPoly MPoly::substitute(std::size_t var, const MPoly& value) const {
  check_same(value);
  MPoly result(ctx_);
  // Group terms by exponent of `var` so each power is computed once.
  std::vector<std::pair<int, std::vector<Term>>> groups;
  for (const auto& t : terms_) {
    int e = t.mono.exponent(var);
    auto it = std::find_if(groups.begin(), groups.end(), [&](auto& g) { return g.first == e; });
    if (it == groups.end()) {
      groups.push_back({e, {}});
      it = std::prev(groups.end());
    }
    it->second.push_back({t.mono.without(var), t.coeff});
  }
  for (auto& [e, ts] : groups) {
    if (e < 0) throw std::invalid_argument("cannot substitute into a negative power");
    MPoly rest = from_terms(ctx_, std::move(ts));
    result += multiply_serial(rest, value.pow(static_cast<unsigned>(e)));
  }
  return result;
}

MPoly MPoly::transfer(const ContextPtr& to) const {
  if (ctx_ == to) return *this;
  std::vector<std::uint32_t> map(ctx_->size());
  for (std::size_t i = 0; i < ctx_->size(); ++i) {
    auto j = to->find((*ctx_)[i].name);
    map[i] = j ? static_cast<std::uint32_t>(*j) : UINT32_MAX;
  }
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::vector<Monomial::Entry> es;
    for (const auto& e : t.mono.entries()) {
      if (map[e.var] == UINT32_MAX)
        throw ContextMismatch("variable '" + (*ctx_)[e.var].name + "' missing in target context");
      es.push_back({map[e.var], e.exp});
    }
    out.push_back({Monomial::from_entries(std::move(es)), t.coeff});
  }
  return from_terms(to, std::move(out));
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string mono = hilbres::to_string(*ctx_, t.mono);
    if (mono.empty()) {
      out += hilbres::to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += hilbres::to_string(c) + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(const ContextPtr& ctx, std::string_view text) : ctx_(ctx), s_(text) {}

  MPoly parse() {
    MPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) +
                     "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    skip();
    MPoly acc(ctx_);
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    MPoly t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  MPoly term() {
    MPoly acc = power();
    for (;;) {
      if (accept('*')) {
        acc *= power();
      } else if (accept('/')) {
        MPoly d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant");
        acc *= Rational(1) / d.constant_term();
      } else {
        break;
      }
    }
    return acc;
  }

  int integer_exponent() {
    skip();
    bool paren = accept('(');
    skip();
    bool neg = false;
    if (accept('-')) neg = true;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (paren && !accept(')')) fail("expected ')'");
    return neg ? -e : e;
  }

  MPoly power() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      if (accept('^')) {
        int e = integer_exponent();
        if (e < 0) fail("negative power of a compound expression");
        return inner.pow(static_cast<unsigned>(e));
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Rational v(Integer(std::string(s_.substr(start, pos_ - start))));
      if (accept('^')) {
        int e = integer_exponent();
        Rational r(1);
        for (int i = 0; i < std::abs(e); ++i) r *= v;
        if (e < 0) r = Rational(1) / r;
        v = r;
      }
      return MPoly(ctx_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto idx = ctx_->find(name);
      if (!idx) fail("unknown variable '" + name + "'");
      int e = 1;
      if (accept('^')) e = integer_exponent();
      if (e < 0 && !ctx_->is_residue(*idx)) fail("negative power of geometry symbol " + name);
      return MPoly::variable(ctx_, *idx, e);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const ContextPtr& ctx_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_poly(const ContextPtr& ctx, std::string_view text) {
  return Parser(ctx, text).parse();
}

// ---------------------------------------------------------------------------
// LinearForm

LinearForm::LinearForm(ContextPtr ctx) : constant_(std::move(ctx)) {}

LinearForm LinearForm::from_poly(const MPoly& p, int multiplicity) {
  LinearForm f(p.context());
  f.set_multiplicity(multiplicity);
  const auto& ctx = *p.context();
  std::vector<MPoly::Term> constant;
  for (const auto& t : p.terms()) {
    std::size_t residue_count = 0;
    std::optional<std::size_t> var;
    for (const auto& e : t.mono.entries()) {
      if (ctx.is_residue(e.var)) {
        if (e.exp != 1) throw std::invalid_argument("not linear in residue variables: " + p.to_string());
        residue_count++;
        var = e.var;
      }
    }
    if (residue_count == 0) {
      constant.push_back(t);
    } else if (residue_count == 1 && t.mono.entries().size() == 1) {
      f.z_coeffs_.push_back({*var, t.coeff});
    } else {
      throw std::invalid_argument("not affine-linear in residue variables: " + p.to_string());
    }
  }
  std::sort(f.z_coeffs_.begin(), f.z_coeffs_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  f.constant_ = MPoly::from_terms(p.context(), std::move(constant));
  if (f.is_zero()) throw std::invalid_argument("zero linear form");
  return f;
}

LinearForm LinearForm::parse(const ContextPtr& ctx, std::string_view text, int multiplicity) {
  return from_poly(parse_poly(ctx, text), multiplicity);
}

void LinearForm::set_multiplicity(int m) {
  if (m <= 0) throw std::invalid_argument("multiplicity must be positive");
  multiplicity_ = m;
}

Rational LinearForm::coefficient(std::size_t var) const {
  for (const auto& [v, c] : z_coeffs_)
    if (v == var) return c;
  return Rational(0);
}

std::optional<std::size_t> LinearForm::leading_variable() const {
  if (z_coeffs_.empty()) return std::nullopt;
  return z_coeffs_.back().first;
}

MPoly LinearForm::to_poly() const {
  MPoly p = constant_;
  for (const auto& [v, c] : z_coeffs_) p += MPoly::variable(context(), v) * c;
  return p;
}

std::string LinearForm::to_string() const {
  std::string s = "(" + to_poly().to_string() + ")";
  if (multiplicity_ != 1) s += "^" + std::to_string(multiplicity_);
  return s;
}

bool operator==(const LinearForm& a, const LinearForm& b) {
  return a.multiplicity_ == b.multiplicity_ && a.z_coeffs_ == b.z_coeffs_ &&
         a.constant_ == b.constant_;
}

}  // namespace hilbres
