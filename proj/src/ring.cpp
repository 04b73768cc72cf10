#include "charloci/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "charloci/errors.hpp"

namespace charloci {

const char* order_name(OrderKind kind) {
  switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GrevLex: return "grevlex";
    case OrderKind::Elimination: return "elimination";
  }
  return "?";
}

PolyRing::PolyRing(std::vector<std::string> var_names, MonomialOrder order)
    : names_(std::move(var_names)), order_(std::move(order)) {
  const int n = num_vars();
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "a polynomial ring needs at least one variable");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (static_cast<int>(seen.size()) != n) throw Error(ErrorCode::InvalidArgument, "duplicate variable names");
  if (order_.precedence.empty()) {
    prec_.resize(n);
    std::iota(prec_.begin(), prec_.end(), 0);
  } else {
    prec_ = order_.precedence;
    auto sorted = prec_;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    if (sorted != identity) throw Error(ErrorCode::InvalidArgument, "variable precedence is not a permutation");
  }
  if (order_.kind == OrderKind::Elimination && (order_.block < 0 || order_.block > n)) {
    throw Error(ErrorCode::InvalidArgument, "elimination block out of range");
  }
}

RingPtr PolyRing::make(std::vector<std::string> var_names, MonomialOrder order) {
  return std::make_shared<const PolyRing>(std::move(var_names), std::move(order));
}

RingPtr PolyRing::standard(int num_vars, MonomialOrder order, const std::string& prefix) {
  std::vector<std::string> names;
  for (int i = 1; i <= num_vars; ++i) names.push_back(prefix + std::to_string(i));
  return make(std::move(names), std::move(order));
}

namespace {

// grevlex restricted to positions prec[lo..hi) of the precedence list.
int grevlex_block(const Exponents& a, const Exponents& b, const std::vector<int>& prec, int lo, int hi) {
  int da = 0, db = 0;
  for (int k = lo; k < hi; ++k) {
    da += a[prec[k]];
    db += b[prec[k]];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int k = hi - 1; k >= lo; --k) {
    int v = prec[k];
    if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int PolyRing::compare(const Exponents& a, const Exponents& b) const {
  const int n = num_vars();
  switch (order_.kind) {
    case OrderKind::Lex:
      for (int k = 0; k < n; ++k) {
        int v = prec_[k];
        if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
      }
      return 0;
    case OrderKind::GrevLex:
      return grevlex_block(a, b, prec_, 0, n);
    case OrderKind::Elimination: {
      int c = grevlex_block(a, b, prec_, 0, order_.block);
      if (c != 0) return c;
      return grevlex_block(a, b, prec_, order_.block, n);
    }
  }
  return 0;
}

int PolyRing::var_index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

RingPtr PolyRing::with_order(MonomialOrder order) const { return make(names_, std::move(order)); }

RingPtr PolyRing::with_eliminated_front_var(const std::string& name) const {
  std::vector<std::string> names;
  names.push_back(name);
  names.insert(names.end(), names_.begin(), names_.end());
  return make(std::move(names), MonomialOrder::elimination(1));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* context) {
  if (!same_ring(a, b)) throw Error(ErrorCode::RingMismatch, context);
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponents quotient(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Exponents product(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

}  // namespace charloci
