#pragma once

#include <memory>
#include <string>
#include <variant>

#include "rimforge/diagram.hpp"
#include "rimforge/presentation.hpp"

namespace rimforge {

/// Structural description of a knot. Values are immutable trees; mirrors
/// are normalized away at construction (two-bridge by the parameter change
/// q -> -q mod p, torus and diagrams by reversing every crossing, sums
/// factorwise), so a spec never contains an explicit mirror node.
class KnotSpec {
 public:
  struct TwoBridge {
    long p, q;
  };  // p odd >= 1, 0 < q < p coprime; p == 1 is the unknot (q stored 0)
  struct Torus {
    long p, q;
    bool mirrored;
  };  // 2 <= p < q coprime
  struct Diagram {
    PdCode pd;
  };
  struct Sum {
    std::shared_ptr<const KnotSpec> left, right;
  };
  using Node = std::variant<TwoBridge, Torus, Diagram, Sum>;

  const Node& node() const { return *node_; }
  /// Canonical lowercase text: twobridge(p,q), torus(p,q), mirror(torus(p,q)),
  /// pd[(a,b,c,d),...], sum(K1,K2), unknot.
  std::string to_string() const;
  bool is_unknot() const;

  friend bool operator==(const KnotSpec& a, const KnotSpec& b) {
    return a.to_string() == b.to_string();
  }

 private:
  std::shared_ptr<const Node> node_;
  explicit KnotSpec(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}
  friend KnotSpec knot_unknot();
  friend KnotSpec knot_twobridge(long p, long q);
  friend KnotSpec knot_torus(long p, long q);
  friend KnotSpec knot_diagram(PdCode pd);
  friend KnotSpec knot_sum(KnotSpec l, KnotSpec r);
  friend KnotSpec knot_mirror(const KnotSpec& k);
};

KnotSpec knot_unknot();
KnotSpec knot_twobridge(long p, long q);
KnotSpec knot_torus(long p, long q);
KnotSpec knot_diagram(PdCode pd);
KnotSpec knot_sum(KnotSpec l, KnotSpec r);
KnotSpec knot_mirror(const KnotSpec& k);
/// The ribbon knot obtained as the n-fold connected sum of J # -J;
/// n = 0 yields the unknot.
KnotSpec knot_jn(const KnotSpec& j, int n);

/// Knot spec text grammar (case- and whitespace-insensitive):
///   twobridge(p,q) | torus(p,q) | mirror(K) | sum(K1,K2) | jn(K,n)
///   | pd[(a,b,c,d),...] | unknot
KnotSpec parse_knot(std::string_view text);

/// A knot group presentation in which every generator is a meridian: the
/// abelianization is Z, every generator maps to its generator, and the
/// meridian mark is a single generator.
struct MarkedGroup {
  Presentation presentation;
  const Word& meridian() const { return presentation.mark(Mark::meridian); }
};

/// Knot group of a spec. Diagrams (and torus knots, via their canonical
/// braid closure) give the Wirtinger presentation with one generator per
/// arc and one relator per crossing less one; two-bridge knots give the
/// standard 2-generator over-presentation; sums glue factor presentations
/// along their meridians.
MarkedGroup wirtinger(const KnotSpec& k);

/// Over-presentation <u,v | W u = v W> of the two-bridge knot b(p,q) with
/// W = u^e1 v^e2 ... v^e(p-1), e_i = (-1)^floor(i*q/p); meridian u.
MarkedGroup two_bridge_presentation(long p, long q);

/// Canonical braid-closure diagram of the (p,q) torus knot.
PdCode torus_pd(long p, long q, bool mirrored = false);

}  // namespace rimforge
