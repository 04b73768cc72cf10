#ifndef CHARLOCI_RING_HPP
#define CHARLOCI_RING_HPP

#include <memory>
#include <string>
#include <vector>

namespace charloci {

// Exponent vector of a monomial; length equals the number of ring variables.
using Exponents = std::vector<int>;

enum class OrderKind {
  Lex,
  GrevLex,
  // Block order: total degree in the first `block` variables (in precedence
  // order) decides, ties broken by grevlex on that block and then by grevlex
  // on the remaining variables. Used for elimination.
  Elimination,
};

struct MonomialOrder {
  OrderKind kind = OrderKind::GrevLex;
  // precedence[0] is the most significant variable. Empty means identity.
  std::vector<int> precedence;
  int block = 0;

  static MonomialOrder grevlex() { return {OrderKind::GrevLex, {}, 0}; }
  static MonomialOrder lex() { return {OrderKind::Lex, {}, 0}; }
  static MonomialOrder elimination(int block) { return {OrderKind::Elimination, {}, block}; }

  bool operator==(const MonomialOrder&) const = default;
};

const char* order_name(OrderKind kind);

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

class PolyRing {
 public:
  PolyRing(std::vector<std::string> var_names, MonomialOrder order = MonomialOrder::grevlex());

  static RingPtr make(std::vector<std::string> var_names, MonomialOrder order = MonomialOrder::grevlex());
  // Variables x1..xn.
  static RingPtr standard(int num_vars, MonomialOrder order = MonomialOrder::grevlex(),
                          const std::string& prefix = "x");

  int num_vars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& var_names() const { return names_; }
  const MonomialOrder& order() const { return order_; }

  // Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Exponents& a, const Exponents& b) const;

  // Index of a variable name, or -1.
  int var_index(const std::string& name) const;

  // Same variables under a different order.
  RingPtr with_order(MonomialOrder order) const;
  // A fresh variable prepended at index 0; the new ring eliminates it.
  RingPtr with_eliminated_front_var(const std::string& name) const;

  bool operator==(const PolyRing& other) const {
    return names_ == other.names_ && order_ == other.order_;
  }

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::vector<int> prec_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);
// Throws RingMismatch when the rings differ.
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* context);

int total_degree(const Exponents& e);
bool divides(const Exponents& a, const Exponents& b);
Exponents lcm(const Exponents& a, const Exponents& b);
Exponents quotient(const Exponents& a, const Exponents& b);  // requires divides(b, a)
Exponents product(const Exponents& a, const Exponents& b);
bool coprime(const Exponents& a, const Exponents& b);

}  // namespace charloci

#endif
