#include "rimforge/knot.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace rimforge {

namespace {

long mod_pos(long x, long m) {
  long r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

KnotSpec knot_unknot() { return KnotSpec(KnotSpec::TwoBridge{1, 0}); }

KnotSpec knot_twobridge(long p, long q) {
  if (p < 1 || p % 2 == 0) throw error("two-bridge p must be odd and positive");
  q = mod_pos(q, p);
  if (p == 1) return knot_unknot();
  if (q == 0 || std::gcd(p, q) != 1) throw error("two-bridge parameters must be coprime");
  return KnotSpec(KnotSpec::TwoBridge{p, q});
}

KnotSpec knot_torus(long p, long q) {
  if (p > q) std::swap(p, q);
  if (p < 2 || std::gcd(p, q) != 1) throw error("torus parameters must be coprime and >= 2");
  return KnotSpec(KnotSpec::Torus{p, q, false});
}

KnotSpec knot_diagram(PdCode pd) {
  validate_pd(pd);
  return KnotSpec(KnotSpec::Diagram{std::move(pd)});
}

KnotSpec knot_sum(KnotSpec l, KnotSpec r) {
  return KnotSpec(KnotSpec::Sum{std::make_shared<const KnotSpec>(std::move(l)),
                                std::make_shared<const KnotSpec>(std::move(r))});
}

KnotSpec knot_mirror(const KnotSpec& k) {
  return std::visit(
      [&](const auto& n) -> KnotSpec {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, KnotSpec::TwoBridge>) {
          if (n.p == 1) return knot_unknot();
          return knot_twobridge(n.p, n.p - n.q);
        } else if constexpr (std::is_same_v<T, KnotSpec::Torus>) {
          return KnotSpec(KnotSpec::Torus{n.p, n.q, !n.mirrored});
        } else if constexpr (std::is_same_v<T, KnotSpec::Diagram>) {
          return KnotSpec(KnotSpec::Diagram{mirror_pd(n.pd)});
        } else {
          return knot_sum(knot_mirror(*n.left), knot_mirror(*n.right));
        }
      },
      k.node());
}

KnotSpec knot_jn(const KnotSpec& j, int n) {
  if (n < 0) throw error("jn repetition count must be >= 0");
  if (n == 0) return knot_unknot();
  KnotSpec block = knot_sum(j, knot_mirror(j));
  KnotSpec out = block;
  for (int i = 1; i < n; ++i) out = knot_sum(out, block);
  return out;
}

bool KnotSpec::is_unknot() const {
  if (const auto* tb = std::get_if<TwoBridge>(&node())) return tb->p == 1;
  return false;
}

std::string KnotSpec::to_string() const {
  std::ostringstream os;
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, TwoBridge>) {
          if (n.p == 1) {
            os << "unknot";
          } else {
            os << "twobridge(" << n.p << "," << n.q << ")";
          }
        } else if constexpr (std::is_same_v<T, Torus>) {
          if (n.mirrored) os << "mirror(";
          os << "torus(" << n.p << "," << n.q << ")";
          if (n.mirrored) os << ")";
        } else if constexpr (std::is_same_v<T, Diagram>) {
          os << "pd[";
          for (std::size_t i = 0; i < n.pd.size(); ++i) {
            if (i) os << ",";
            os << "(" << n.pd[i][0] << "," << n.pd[i][1] << "," << n.pd[i][2] << ","
               << n.pd[i][3] << ")";
          }
          os << "]";
        } else {
          os << "sum(" << n.left->to_string() << "," << n.right->to_string() << ")";
        }
      },
      node());
  return os.str();
}

PdCode torus_pd(long p, long q, bool mirrored) {
  std::vector<int> braid;
  for (long rep = 0; rep < q; ++rep) {
    for (long i = 1; i < p; ++i) braid.push_back(mirrored ? -static_cast<int>(i) : static_cast<int>(i));
  }
  return braid_closure_pd(static_cast<int>(p), braid);
}

MarkedGroup two_bridge_presentation(long p, long q) {
  if (p < 1 || p % 2 == 0) throw error("two-bridge p must be odd and positive");
  q = mod_pos(q, p);
  if (p == 1) {
    std::map<Mark, Word> marks{{Mark::meridian, Word::letter(0)}};
    return MarkedGroup{Presentation({"u"}, {}, marks)};
  }
  if (q == 0 || std::gcd(p, q) != 1) throw error("two-bridge parameters must be coprime");
  // The sign sequence needs the odd representative of q mod 2p; q and q + p
  // describe the same knot (both double-branched covers are L(p,q)).
  long qo = (q % 2 == 1) ? q : q + p;
  // W = u^e1 v^e2 u^e3 ... v^e(p-1), e_i = (-1)^floor(i*qo/p); relator W u (v W)^-1
  std::vector<int> letters;
  for (long i = 1; i <= p - 1; ++i) {
    int gen = (i % 2 == 1) ? 1 : 2;  // odd slots u, even slots v
    long e = (i * qo / p) % 2 == 0 ? 1 : -1;
    letters.push_back(static_cast<int>(e) * gen);
  }
  Word W = Word::from_letters(letters);
  Word u = Word::letter(0), v = Word::letter(1);
  Word relator = W * u * (v * W).inverse();
  std::map<Mark, Word> marks{{Mark::meridian, u}};
  return MarkedGroup{Presentation({"u", "v"}, {relator}, marks)};
}

namespace {

// renames colliding generator names: base, base_2, base_3, ...
std::string fresh_name(const std::string& base, const std::vector<std::string>& taken) {
  auto used = [&](const std::string& s) {
    return std::find(taken.begin(), taken.end(), s) != taken.end();
  };
  if (!used(base)) return base;
  for (int i = 2;; ++i) {
    std::string cand = base + "_" + std::to_string(i);
    if (!used(cand)) return cand;
  }
}

MarkedGroup glue_sum(const MarkedGroup& a, const MarkedGroup& b) {
  std::vector<std::string> names = a.presentation.names();
  std::vector<int> bmap(b.presentation.ngens());
  for (int g = 0; g < b.presentation.ngens(); ++g) {
    std::string nm = fresh_name(b.presentation.name(g), names);
    bmap[g] = static_cast<int>(names.size());
    names.push_back(nm);
  }
  std::vector<Word> relators = a.presentation.relators();
  for (const Word& r : b.presentation.relators()) relators.push_back(r.reindexed(bmap));
  Word mb = b.meridian().reindexed(bmap);
  relators.push_back(a.meridian() * mb.inverse());

  std::map<Mark, Word> marks{{Mark::meridian, a.meridian()}};
  if (a.presentation.has_mark(Mark::longitude) && b.presentation.has_mark(Mark::longitude)) {
    marks[Mark::longitude] =
        a.presentation.mark(Mark::longitude) * b.presentation.mark(Mark::longitude).reindexed(bmap);
  }
  return MarkedGroup{Presentation(std::move(names), std::move(relators), std::move(marks))};
}

void check_meridional(const MarkedGroup& mg) {
  // every generator must be a meridian: H1 = Z via the all-ones degree map
  for (const Word& r : mg.presentation.relators()) {
    if (r.total_degree() != 0) throw error("internal: knot relator with nonzero degree");
  }
  AbelianInvariants ab = mg.presentation.abelianization();
  if (!(ab.free_rank == 1 && ab.torsion.empty()))
    throw error("internal: knot group abelianization is not Z");
  if (mg.meridian().size() != 1)
    throw error("internal: meridian mark is not a single generator");
}

}  // namespace

MarkedGroup wirtinger(const KnotSpec& k) {
  MarkedGroup mg = std::visit(
      [&](const auto& n) -> MarkedGroup {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, KnotSpec::TwoBridge>) {
          return two_bridge_presentation(n.p, n.q == 0 ? 1 : n.q);
        } else if constexpr (std::is_same_v<T, KnotSpec::Torus>) {
          return MarkedGroup{wirtinger_from_pd(torus_pd(n.p, n.q, n.mirrored)).presentation};
        } else if constexpr (std::is_same_v<T, KnotSpec::Diagram>) {
          return MarkedGroup{wirtinger_from_pd(n.pd).presentation};
        } else {
          return glue_sum(wirtinger(*n.left), wirtinger(*n.right));
        }
      },
      k.node());
  check_meridional(mg);
  return mg;
}

namespace {

struct KnotLexer {
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "parse error at offset " << pos << ": " << msg;
    throw error(os.str());
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  std::string word() {
    skip_ws();
    std::size_t b = pos;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
    if (b == pos) fail("expected knot constructor name");
    std::string w(s.substr(b, pos - b));
    std::transform(w.begin(), w.end(), w.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return w;
  }
  long integer() {
    skip_ws();
    std::size_t b = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected integer");
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return std::stol(std::string(s.substr(b, pos - b)));
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
};

KnotSpec parse_knot_inner(KnotLexer& lx) {
  std::string name = lx.word();
  if (name == "unknot") return knot_unknot();
  if (name == "twobridge") {
    lx.expect('(');
    long p = lx.integer();
    lx.expect(',');
    long q = lx.integer();
    lx.expect(')');
    return knot_twobridge(p, q);
  }
  if (name == "torus") {
    lx.expect('(');
    long p = lx.integer();
    lx.expect(',');
    long q = lx.integer();
    lx.expect(')');
    return knot_torus(p, q);
  }
  if (name == "mirror") {
    lx.expect('(');
    KnotSpec k = parse_knot_inner(lx);
    lx.expect(')');
    return knot_mirror(k);
  }
  if (name == "sum") {
    lx.expect('(');
    KnotSpec l = parse_knot_inner(lx);
    lx.expect(',');
    KnotSpec r = parse_knot_inner(lx);
    lx.expect(')');
    return knot_sum(l, r);
  }
  if (name == "jn") {
    lx.expect('(');
    KnotSpec j = parse_knot_inner(lx);
    lx.expect(',');
    long n = lx.integer();
    lx.expect(')');
    return knot_jn(j, static_cast<int>(n));
  }
  if (name == "pd") {
    lx.expect('[');
    PdCode pd;
    while (true) {
      lx.expect('(');
      std::array<long, 4> q{};
      for (int i = 0; i < 4; ++i) {
        if (i) lx.expect(',');
        q[i] = lx.integer();
      }
      lx.expect(')');
      pd.push_back(q);
      if (lx.peek() != ',') break;
      lx.expect(',');
    }
    lx.expect(']');
    return knot_diagram(std::move(pd));
  }
  lx.fail("unknown knot constructor '" + name + "'");
}

}  // namespace

KnotSpec parse_knot(std::string_view text) {
  KnotLexer lx{text};
  KnotSpec k = parse_knot_inner(lx);
  if (!lx.done()) lx.fail("trailing input after knot spec");
  return k;
}

}  // namespace rimforge
