// SPDX-License-Identifier: Apache-2.0
#include "polycount/expr.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "polycount/errors.hpp"

namespace polycount {

struct Expr::Node {
  Kind kind;
  Int ival;
  Rat rval;
  int slot = -1;
  std::vector<Expr> kids;
};

namespace {

struct Interner {
  std::mutex mu;
  std::unordered_map<std::string, int> ids;
  std::vector<std::string> names;
};

Interner& interner() {
  static Interner in;
  return in;
}

Expr make(Expr::Kind k, std::vector<Expr> kids, int slot = -1) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = k;
  n->kids = std::move(kids);
  n->slot = slot;
  return Expr(std::shared_ptr<const Expr::Node>(std::move(n)));
}

long as_long(const Rat& q, const char* what) {
  if (!is_integer(q)) throw ParameterError(std::string(what) + " must be an integer, got " + to_string(q));
  Int z = to_integer(q);
  if (!z.fits_slong_p()) throw ParameterError(std::string(what) + " out of range");
  return z.get_si();
}

}  // namespace

int var_slot(const std::string& name) {
  auto& in = interner();
  std::lock_guard<std::mutex> lock(in.mu);
  auto [it, fresh] = in.ids.emplace(name, static_cast<int>(in.names.size()));
  if (fresh) in.names.push_back(name);
  return it->second;
}

const std::string& var_name(int slot) {
  auto& in = interner();
  std::lock_guard<std::mutex> lock(in.mu);
  return in.names.at(slot);
}

Expr::Expr(int v) : Expr(integer(Int(v))) {}
Expr::Expr(long v) : Expr(integer(Int(v))) {}

Expr Expr::integer(const Int& v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::integer;
  n->ival = v;
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::rational(const Rat& v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::rational;
  n->rval = v;
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::var(const std::string& name) { return make(Kind::variable, {}, var_slot(name)); }

Expr::Kind Expr::kind() const { return node_->kind; }

std::string Expr::to_string() const {
  const Node& n = *node_;
  auto k = [&](int i) { return n.kids[i].to_string(); };
  switch (n.kind) {
    case Kind::integer:
      return n.ival < 0 ? "(" + n.ival.get_str() + ")" : n.ival.get_str();
    case Kind::rational:
      return "(" + n.rval.get_str() + ")";
    case Kind::variable:
      return var_name(n.slot);
    case Kind::sum:
      return "(" + k(0) + " + " + k(1) + ")";
    case Kind::product:
      return k(0) + "*" + k(1);
    case Kind::quotient:
      return k(0) + "/(" + k(1) + ")";
    case Kind::power:
      return "(" + k(0) + ")^(" + k(1) + ")";
    case Kind::binomial:
      return "C(" + k(0) + ", " + k(1) + ")";
    case Kind::factorial:
      return "(" + k(0) + ")!";
    case Kind::sign:
      return "(-1)^(" + k(0) + ")";
    case Kind::series:
      return "sum[" + var_name(n.slot) + "=" + k(0) + ".." + k(1) + "](" + k(2) + ")";
  }
  return "?";
}

int Expr::literal_count() const {
  int c = node_->kind == Kind::integer ? 1 : 0;
  for (const auto& e : node_->kids) c += e.literal_count();
  return c;
}

namespace {

Expr perturb_impl(const Expr& e, int& idx, long delta) {
  const auto& n = e.node();
  if (n.kind == Expr::Kind::integer) {
    if (idx-- == 0) return Expr::integer(n.ival + delta);
    return e;
  }
  if (n.kids.empty() || idx < 0) return e;
  std::vector<Expr> kids;
  kids.reserve(n.kids.size());
  for (const auto& c : n.kids) kids.push_back(perturb_impl(c, idx, delta));
  return make(n.kind, std::move(kids), n.slot);
}

}  // namespace

Expr Expr::perturb_literal(int idx, long delta) const {
  if (idx < 0 || idx >= literal_count()) throw ParameterError("literal index out of range");
  return perturb_impl(*this, idx, delta);
}

Expr Expr::substitute(const std::string& name, const Expr& by) const {
  const int slot = var_slot(name);
  const Node& n = *node_;
  if (n.kind == Kind::variable) return n.slot == slot ? by : *this;
  if (n.kids.empty()) return *this;
  std::vector<Expr> kids;
  for (std::size_t i = 0; i < n.kids.size(); ++i) {
    // The summation variable shadows outer bindings inside the body.
    bool shadowed = n.kind == Kind::series && i == 2 && n.slot == slot;
    kids.push_back(shadowed ? n.kids[i] : n.kids[i].substitute(name, by));
  }
  return make(n.kind, std::move(kids), n.slot);
}

Expr operator+(const Expr& a, const Expr& b) { return make(Expr::Kind::sum, {a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }
Expr operator-(const Expr& a) { return make(Expr::Kind::product, {Expr(-1), a}); }
Expr operator*(const Expr& a, const Expr& b) { return make(Expr::Kind::product, {a, b}); }
Expr operator/(const Expr& a, const Expr& b) { return make(Expr::Kind::quotient, {a, b}); }

Expr V(const std::string& name) { return Expr::var(name); }
Expr Q(long num, long den) { return Expr::rational(frac(num, den)); }
Expr C(const Expr& a, const Expr& b) { return make(Expr::Kind::binomial, {a, b}); }
Expr fact(const Expr& a) { return make(Expr::Kind::factorial, {a}); }
Expr sgn(const Expr& e) { return make(Expr::Kind::sign, {e}); }
Expr pow(const Expr& base, const Expr& exponent) { return make(Expr::Kind::power, {base, exponent}); }
Expr sum(const std::string& var, const Expr& lo, const Expr& hi, const Expr& body) {
  return make(Expr::Kind::series, {lo, hi, body}, var_slot(var));
}

void Env::set(const std::string& name, const Rat& v) { set(var_slot(name), v); }

void Env::set(int slot, const Rat& v) {
  if (slot >= static_cast<int>(values_.size())) {
    values_.resize(slot + 1);
    bound_.resize(slot + 1, 0);
  }
  values_[slot] = v;
  bound_[slot] = 1;
}

void Env::unset(int slot) {
  if (slot < static_cast<int>(bound_.size())) bound_[slot] = 0;
}

bool Env::has(int slot) const { return slot < static_cast<int>(bound_.size()) && bound_[slot]; }

const Rat& Env::get(int slot) const {
  if (!has(slot)) throw std::logic_error("unbound variable " + var_name(slot));
  return values_[slot];
}

Rat eval(const Expr& e, Env& env) {
  using K = Expr::Kind;
  const auto& n = e.node();
  switch (n.kind) {
    case K::integer:
      return Rat(n.ival);
    case K::rational:
      return n.rval;
    case K::variable:
      return env.get(n.slot);
    case K::sum:
      return eval(n.kids[0], env) + eval(n.kids[1], env);
    case K::product: {
      Rat a = eval(n.kids[0], env);
      if (a == 0) {
        // Still evaluate the right factor so poles are never masked.
        eval(n.kids[1], env);
        return 0;
      }
      return a * eval(n.kids[1], env);
    }
    case K::quotient: {
      Rat d = eval(n.kids[1], env);
      if (d == 0) throw PoleError("division by zero in " + e.to_string());
      return eval(n.kids[0], env) / d;
    }
    case K::power:
      return rpow(eval(n.kids[0], env), as_long(eval(n.kids[1], env), "exponent"));
    case K::binomial: {
      Rat a = eval(n.kids[0], env);
      long b = as_long(eval(n.kids[1], env), "binomial lower index");
      if (is_integer(a)) {
        Int z = to_integer(a);
        if (z.fits_slong_p()) return Rat(binom(z.get_si(), b));
      }
      return binom(a, b);
    }
    case K::factorial: {
      long a = as_long(eval(n.kids[0], env), "factorial argument");
      if (a < 0) throw PoleError("factorial of negative integer");
      return Rat(factorial(a));
    }
    case K::sign:
      return Rat(neg_one_pow(as_long(eval(n.kids[0], env), "sign exponent")));
    case K::series: {
      long lo = as_long(eval(n.kids[0], env), "summation bound");
      long hi = as_long(eval(n.kids[1], env), "summation bound");
      const bool had = env.has(n.slot);
      Rat saved = had ? env.get(n.slot) : Rat(0);
      Rat acc = 0;
      try {
        for (long v = lo; v <= hi; ++v) {
          env.set(n.slot, Rat(v));
          acc += eval(n.kids[2], env);
        }
      } catch (...) {
        if (had) env.set(n.slot, saved); else env.unset(n.slot);
        throw;
      }
      if (had) env.set(n.slot, saved); else env.unset(n.slot);
      return acc;
    }
  }
  throw std::logic_error("unknown expression kind");
}

Rat eval(const Expr& e, const std::vector<std::pair<std::string, Rat>>& assignment) {
  Env env;
  for (const auto& [k, v] : assignment) env.set(k, v);
  return eval(e, env);
}

}  // namespace polycount
