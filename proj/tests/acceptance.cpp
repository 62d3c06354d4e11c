// Acceptance run: one PASS/FAIL line per criterion. Every criterion checks
// the engine against naive oracles from oracles.hpp or the brute-force
// helpers below, and must finish within its time limit.
// Usage: acceptance <path to the exreg CLI>

#include "oracles.hpp"

#include <exreg/equivalence.hpp>
#include <exreg/exreg_universal.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace exreg;
using oracle::Mat;
using oracle::Pairs;

namespace {

// ---- brute-force helpers ---------------------------------------------------

bool surjective(const std::vector<std::size_t>& f, std::size_t m) {
  std::vector<bool> hit(m, false);
  for (auto v : f) hit[v] = true;
  for (bool h : hit)
    if (!h) return false;
  return true;
}

// x <= x' iff f x <= f x' (reflects and preserves the order)
bool order_embedding(const Mat& X, const Mat& Y, const std::vector<std::size_t>& f) {
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = 0; j < X.size(); ++j)
      if (X[i][j] != Y[f[i]][f[j]]) return false;
  return true;
}

Pairs graph_pairs(const std::vector<std::size_t>& f) {
  Pairs out;
  for (std::size_t x = 0; x < f.size(); ++x) out.emplace(x, f[x]);
  return out;
}

Pairs hyper_pairs(const std::vector<std::size_t>& f, const Mat& Y) {
  Pairs out;
  for (std::size_t x = 0; x < f.size(); ++x)
    for (std::size_t y = 0; y < Y.size(); ++y)
      if (Y[f[x]][y]) out.emplace(x, y);
  return out;
}

Pairs identity_pairs(const Mat& X) { return oracle::pairs(X); }

// Smallest adjacency bit string over all relabellings.
std::vector<bool> canonical_form(const Mat& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> s(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s[p[i] * n + p[j]] = m[i][j];
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Number of maps h from a poset H with h∘q = g, over all maps into Z, keyed by h∘q.
std::map<std::vector<std::size_t>, std::size_t> factor_counts(const std::vector<std::size_t>& q, const Mat& H,
                                                              const Mat& Z) {
  std::map<std::vector<std::size_t>, std::size_t> out;
  for (const auto& h : oracle::monotone_maps(H, Z)) {
    std::vector<std::size_t> hq(q.size());
    for (std::size_t x = 0; x < q.size(); ++x) hq[x] = h[q[x]];
    ++out[hq];
  }
  return out;
}

// Morphism laws checked on sets of pairs.
bool valid_morphism_sets(const Pairs& E, const Pairs& F, const Pairs& lo, const Pairs& up) {
  using namespace oracle;
  return compose(F, compose(lo, E)) == lo && compose(E, compose(up, F)) == up && subset(E, compose(up, lo)) &&
         subset(compose(lo, up), F);
}

bool valid_morphism_sets(const ExRegMorphism& R) {
  return valid_morphism_sets(oracle::pairs(R.src().congruence()), oracle::pairs(R.tgt().congruence()),
                             oracle::pairs(R.lower()), oracle::pairs(R.upper()));
}

// ---- bookkeeping ------------------------------------------------------------

struct Tally {
  std::size_t failures = 0;
  std::string first;
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

struct Outcome {
  std::string counts;
  Tally tally;
};

using Clock = std::chrono::steady_clock;

bool run_criterion(int id, const std::string& name, double limit, const std::function<Outcome()>& body) {
  auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.tally.expect(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  bool ok = out.tally.failures == 0 && secs < limit;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (ok ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << out.counts << "; "
       << out.tally.failures << " failures; " << secs << " s (limit " << limit << " s)";
  if (out.tally.failures) line << "; first: " << out.tally.first;
  if (secs >= limit) line << "; over time limit";
  std::cout << line.str() << std::endl;
  return ok;
}

std::string cnt(std::size_t n, const char* what) { return std::to_string(n) + " " + what; }

// ---- 1. FinPos regularity ----------------------------------------------------

Outcome finpos_regularity() {
  Outcome o;
  Tally& t = o.tally;
  Generator g(101);
  std::size_t maps = 0, cospans = 0, surj = 0, factor_checks = 0;
  for (; maps < 300; ++maps) {
    MonotoneMap f = g.map_upto(6);
    auto [e, m] = image_factorize(f);
    Mat Y = oracle::order(f.cod()), I = oracle::order(e.cod());
    std::vector<std::size_t> me(f.dom().size());
    for (std::size_t x = 0; x < me.size(); ++x) me[x] = m(e(x));
    t.expect(me == f.assign(), "image factorization does not compose to f");
    t.expect(surjective(e.assign(), e.cod().size()), "image leg is not surjective");
    t.expect(order_embedding(I, Y, m.assign()), "inclusion leg is not an order embedding");
    std::set<std::size_t> img(f.assign().begin(), f.assign().end());
    t.expect(std::set<std::size_t>(m.assign().begin(), m.assign().end()) == img, "image is not the set image");
    MapClass ce = classify_map(e), cm = classify_map(m);
    t.expect(ce.is_so && cm.is_ff, "classification of the image legs");
  }
  for (; cospans < 100; ++cospans) {
    MonotoneMap s = g.surjection_upto(5);
    MonotoneMap h = g.map_into(s.cod(), 5);
    Span pb = pullback(s, h);
    // oracle: all (x,z) with s x = h z, ordered componentwise
    std::vector<std::pair<std::size_t, std::size_t>> pts;
    for (std::size_t x = 0; x < s.dom().size(); ++x)
      for (std::size_t z = 0; z < h.dom().size(); ++z)
        if (s(x) == h(z)) pts.emplace_back(x, z);
    std::set<std::pair<std::size_t, std::size_t>> got;
    for (std::size_t p = 0; p < pb.apex.size(); ++p) got.emplace(pb.p0(p), pb.p1(p));
    t.expect(got.size() == pb.apex.size() &&
                 got == std::set<std::pair<std::size_t, std::size_t>>(pts.begin(), pts.end()),
             "pullback points differ from the set oracle");
    for (std::size_t p = 0; p < pb.apex.size(); ++p)
      for (std::size_t q = 0; q < pb.apex.size(); ++q)
        t.expect(pb.apex.leq(p, q) == (s.dom().leq(pb.p0(p), pb.p0(q)) && h.dom().leq(pb.p1(p), pb.p1(q))),
                 "pullback order is not componentwise");
    t.expect(surjective(pb.p1.assign(), h.dom().size()), "pulled back surjection is not surjective");
  }
  const Mat Zs[] = {oracle::order(chain(2)), oracle::order(chain(3)), oracle::order(discrete(2))};
  for (; surj < 200; ++surj) {
    MonotoneMap s = g.surjection_upto(6);
    Span k = kernel_congruence(s);
    MonotoneMap q = coinserter(k.p0, k.p1);
    Mat X = oracle::order(s.dom()), Y = oracle::order(s.cod()), Q = oracle::order(q.cod());
    t.expect(oracle::isomorphic(Q, Y), "coinserter of the kernel is not the codomain");
    for (std::size_t a = 0; a < X.size(); ++a)
      for (std::size_t b = 0; b < X.size(); ++b)
        t.expect(Q[q(a)][q(b)] == Y[s(a)][s(b)], "coinserter does not identify like s");
    // universal property: every g with g k0 <= g k1 factors exactly once, the others never
    for (const Mat& Z : Zs) {
      auto counts = factor_counts(q.assign(), Q, Z);
      for (const auto& gm : oracle::monotone_maps(X, Z)) {
        bool cocone = true;
        for (std::size_t p = 0; p < k.apex.size() && cocone; ++p) cocone = Z[gm[k.p0(p)]][gm[k.p1(p)]];
        auto it = counts.find(gm);
        std::size_t n = it == counts.end() ? 0 : it->second;
        t.expect(n == (cocone ? 1U : 0U), "coinserter factorization count");
        ++factor_checks;
      }
    }
  }
  o.counts = cnt(maps, "maps") + ", " + cnt(cospans, "cospans") + ", " + cnt(surj, "surjections") + " (" +
             cnt(factor_checks, "enumerated test maps") + ")";
  return o;
}

// ---- 2. relation laws -----------------------------------------------------------

Outcome relation_laws() {
  Outcome o;
  Tally& t = o.tally;
  Generator g(202);
  using namespace oracle;
  std::size_t ml = 0, md = 0, assoc = 0, inv = 0;
  for (; ml < 500; ++ml) {
    FinPoset X = g.poset_upto(5), Y = g.poset_upto(5), Z = g.poset_upto(5);
    Relation P = g.relation(X, Y), Q = g.relation(Y, Z), S = g.relation(X, Z);
    auto r = check_modular_law(P, Q, S);
    Pairs p = pairs(P), q = pairs(Q), s = pairs(S);
    bool o1 = subset(meet(compose(q, p), s), compose(q, meet(p, compose(opposite(q), s))));
    bool o2 = subset(meet(compose(q, p), s), compose(meet(q, compose(s, opposite(p))), p));
    t.expect(o1 && o2, "modular law fails in the set oracle");
    t.expect(r.ml.holds == o1 && r.ml_star.holds == o2, "engine modular law disagrees with the oracle");
  }
  for (; md < 200; ++md) {
    MonotoneMap f = g.map_upto(5);
    MonotoneMap h = g.map_from(f.dom(), 5);
    Relation R = g.relation(f.cod(), h.cod()), S = g.relation(f.cod(), h.cod());
    auto r = check_map_distributivity(R, S, f, h);
    Pairs gf = graph_pairs(f.assign()), ho = opposite(graph_pairs(h.assign()));
    Pairs rs = meet(pairs(R), pairs(S));
    bool o1 = compose(rs, gf) == meet(compose(pairs(R), gf), compose(pairs(S), gf));
    bool o2 = compose(ho, rs) == meet(compose(ho, pairs(R)), compose(ho, pairs(S)));
    t.expect(o1 && o2, "map distributivity fails in the set oracle");
    t.expect(r.md == o1 && r.md_star == o2, "engine distributivity disagrees with the oracle");
  }
  for (; assoc < 300; ++assoc) {
    FinPoset W = g.poset_upto(5), X = g.poset_upto(5), Y = g.poset_upto(5), Z = g.poset_upto(5);
    Relation R = g.relation(W, X), S = g.relation(X, Y), T = g.relation(Y, Z);
    Relation lhs = compose(T, compose(S, R)), rhs = compose(compose(T, S), R);
    t.expect(lhs == rhs, "composition is not associative");
    t.expect(pairs(lhs) == compose(pairs(T), compose(pairs(S), pairs(R))), "composite differs from the oracle");
    t.expect(compose(R, delta(W)) == R && compose(delta(X), R) == R, "Δ is not a unit");
    Relation Rw = g.weakening_relation(W, X);
    t.expect(compose(identity_I(X), compose(Rw, identity_I(W))) == Rw, "I is not a unit on weakening relations");
    t.expect(pairs(identity_I(W)) == identity_pairs(order(W)), "I is not the order");
  }
  for (; inv < 300; ++inv) {
    FinPoset X = g.poset_upto(5), Y = g.poset_upto(5), Z = g.poset_upto(5);
    Relation R = g.relation(X, Y), S = g.relation(Y, Z);
    t.expect(opposite(opposite(R)) == R, "opposite is not an involution");
    t.expect(opposite(compose(S, R)) == compose(opposite(R), opposite(S)), "opposite does not reverse composites");
    t.expect(pairs(opposite(R)) == opposite(pairs(R)), "opposite differs from the oracle");
  }
  o.counts = cnt(ml, "modular triples") + ", " + cnt(md, "distributivity instances") + ", " +
             cnt(assoc, "associativity triples") + ", " + cnt(inv, "involution pairs");
  return o;
}

// ---- 3. maps theorem -------------------------------------------------------------

// Rows as bit masks: r[y] has bit x set when ψ(y,x).
struct SmallRel {
  std::size_t n = 0, m = 0;  // dom size, cod size
  std::array<std::uint32_t, 8> row{};
};

// Exhaustive search for right adjoints ψ: Y -> X of φ: X -> Y in the
// weakening-relation category, with carriers of at most 4 elements.
std::vector<Pairs> adjoint_search(const Mat& X, const Mat& Y, const Pairs& phi) {
  const std::size_t n = X.size(), m = Y.size();
  std::vector<std::uint32_t> up_x(n, 0), phi_row(n, 0);  // up_x[x]: the x' with x <= x'
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (X[i][j]) up_x[i] |= 1U << j;
  for (auto [x, y] : phi) phi_row[x] |= 1U << y;
  std::vector<Pairs> found;
  const std::size_t slots = n * m;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
    std::vector<std::uint32_t> psi(m, 0);  // psi[y]: the x with ψ(y,x)
    for (std::size_t s = 0; s < slots; ++s)
      if (mask >> s & 1) psi[s / n] |= 1U << (s % n);
    bool ok = true;
    // weakening: y' <= y, ψ(y,x), x <= x' give ψ(y',x')
    for (std::size_t y = 0; y < m && ok; ++y)
      for (std::size_t x = 0; x < n && ok; ++x)
        if (psi[y] >> x & 1)
          for (std::size_t y2 = 0; y2 < m && ok; ++y2)
            if (Y[y2][y]) ok = (up_x[x] & ~psi[y2]) == 0;
    // unit: x <= x' gives some y with φ(x,y) and ψ(y,x')
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t x2 = 0; x2 < n && ok; ++x2) {
        if (!X[x][x2]) continue;
        bool some = false;
        for (std::size_t y = 0; y < m && !some; ++y) some = (phi_row[x] >> y & 1) && (psi[y] >> x2 & 1);
        ok = some;
      }
    // counit: ψ(y,x) and φ(x,y') give y <= y'
    for (std::size_t y = 0; y < m && ok; ++y)
      for (std::size_t x = 0; x < n && ok; ++x)
        if (psi[y] >> x & 1)
          for (std::size_t y2 = 0; y2 < m && ok; ++y2)
            if (phi_row[x] >> y2 & 1) ok = Y[y][y2];
    if (!ok) continue;
    Pairs p;
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t x = 0; x < n; ++x)
        if (psi[y] >> x & 1) p.emplace(y, x);
    found.push_back(p);
  }
  return found;
}

Outcome maps_theorem() {
  Outcome o;
  Tally& t = o.tally;
  Generator g(303);
  std::size_t roundtrips = 0, relations = 0, hypergraphs = 0;
  for (; roundtrips < 200; ++roundtrips) {
    MonotoneMap f = g.map_upto(6);
    t.expect(oracle::pairs(hypergraph(f)) == hyper_pairs(f.assign(), oracle::order(f.cod())), "f_* formula");
    t.expect(extract_map(hypergraph(f), hypograph(f)) == f, "extract_map does not recover f");
  }
  for (; relations < 200; ++relations) {
    FinPoset X = g.poset_upto(4), Y = g.poset_upto(4);
    Relation phi = g.weakening_relation(X, Y, relations % 2 ? 0.25 : 0.5);
    if (relations % 3 == 0)
      if (auto f = g.map(X, Y)) phi = hypergraph(*f);
    Mat mx = oracle::order(X), my = oracle::order(Y);
    Pairs ph = oracle::pairs(phi);
    // hypergraph by exhaustive search over monotone maps
    std::optional<std::vector<std::size_t>> witness;
    for (const auto& f : oracle::monotone_maps(mx, my))
      if (hyper_pairs(f, my) == ph) witness = f;
    auto adj = adjoint_search(mx, my, ph);
    t.expect(adj.size() <= 1, "right adjoint is not unique");
    t.expect(!adj.empty() == witness.has_value(), "adjoint existence differs from being a hypergraph");
    auto engine = right_adjoint(phi);
    t.expect(engine.has_value() == !adj.empty(), "engine adjoint existence differs from the search");
    if (engine && !adj.empty()) {
      t.expect(oracle::pairs(*engine) == adj[0], "engine adjoint differs from the search");
      if (witness) t.expect(extract_map(phi, *engine).assign() == *witness, "extracted map differs");
    }
    hypergraphs += witness ? 1 : 0;
  }
  o.counts = cnt(roundtrips, "round trips") + ", " + cnt(relations, "weakening relations") + " (" +
             cnt(hypergraphs, "hypergraphs") + ")";
  return o;
}

// ---- 4. tabulations ---------------------------------------------------------------

Outcome tabulations() {
  Outcome o;
  Tally& t = o.tally;
  Generator g(404);
  using namespace oracle;
  std::size_t phis = 0, cones = 0, random_cones = 0;
  for (; phis < 200; ++phis) {
    ExRegObject A = g.exreg_object(4), B = g.exreg_object(4);
    Relation phi = q_closure(g.relation(A.carrier(), B.carrier()), A, B);
    Pairs E = pairs(A.congruence()), F = pairs(B.congruence()), ph = pairs(phi);
    t.expect(compose(meet(F, opposite(F)), compose(ph, meet(E, opposite(E)))) == ph, "Φ is not a Q(E)-morphism");
    Tabulation tab = tabulate(phi, A, B);
    t.expect(valid_morphism_sets(tab.leg0) && valid_morphism_sets(tab.leg1), "tabulation legs are not morphisms");
    Pairs g0 = meet(pairs(tab.leg0.lower()), opposite(pairs(tab.leg0.upper())));
    Pairs g1 = meet(pairs(tab.leg1.lower()), opposite(pairs(tab.leg1.upper())));
    t.expect(compose(g1, opposite(g0)) == ph, "Φ != R1 R0°");
    Pairs k = meet(compose(pairs(tab.leg0.upper()), pairs(tab.leg0.lower())),
                   compose(pairs(tab.leg1.upper()), pairs(tab.leg1.lower())));
    t.expect(k == pairs(tab.apex.congruence()), "meet of the leg kernels is not the apex congruence");

    Realization ra = quotient_realize(A), rb = quotient_realize(B), rt = quotient_realize(tab.apex);
    MonotoneMap l0 = realize_morphism(tab.leg0, rt, ra), l1 = realize_morphism(tab.leg1, rt, rb);
    Mat T = order(rt.poset);
    for (std::size_t c = 0; c < 20; ++c, ++cones) {
      ExRegObject C = g.exreg_object(3);
      std::optional<ExRegMorphism> S0, S1;
      // a few random pairs first; otherwise a cone through a random map into the apex
      for (int attempt = 0; attempt < 4 && !S0; ++attempt) {
        auto a = g.exreg_morphism(C, A), b = g.exreg_morphism(C, B);
        if (!a || !b) continue;
        Pairs ga = pairs(graph_of(*a)), gb = pairs(graph_of(*b));
        if (subset(compose(gb, opposite(ga)), ph)) {
          S0 = a;
          S1 = b;
          ++random_cones;
        }
      }
      if (!S0) {
        auto h = g.exreg_morphism(C, tab.apex);
        if (!h) continue;
        S0 = compose(tab.leg0, *h);
        S1 = compose(tab.leg1, *h);
      }
      Pairs cone = compose(pairs(graph_of(*S1)), opposite(pairs(graph_of(*S0))));
      t.expect(subset(cone, ph), "generated cone is not included in Φ");
      ExRegMorphism H = tabulation_factor(tab, *S0, *S1);
      t.expect(valid_morphism_sets(H), "factor is not a morphism");
      t.expect(compose(pairs(tab.leg0.lower()), pairs(H.lower())) == pairs(S0->lower()) &&
                   compose(pairs(tab.leg1.lower()), pairs(H.lower())) == pairs(S1->lower()),
               "factor does not commute");
      // uniqueness through the realizations: count maps h with l0 h = s0 and l1 h = s1
      Realization rc = quotient_realize(C);
      MonotoneMap s0 = realize_morphism(*S0, rc, ra), s1 = realize_morphism(*S1, rc, rb);
      std::size_t count = 0;
      std::vector<std::size_t> only;
      for (const auto& h : monotone_maps(order(rc.poset), T)) {
        bool ok = true;
        for (std::size_t x = 0; x < h.size() && ok; ++x) ok = l0(h[x]) == s0(x) && l1(h[x]) == s1(x);
        if (ok) {
          ++count;
          only = h;
        }
      }
      t.expect(count == 1, "factorizations through the tabulation: " + std::to_string(count));
      if (count == 1) t.expect(realize_morphism(H, rc, rt).assign() == only, "factor is not the unique one");
    }
  }
  o.counts = cnt(phis, "relations Φ") + ", " + cnt(cones, "cones") + " (" + cnt(random_cones, "random pairs") + ")";
  return o;
}

// ---- 5. exact completion structure ----------------------------------------------

// so_agree reports whether RR° = F ∩ F° agrees with R_*R^* = F.
MapClass classify_by_sets(const ExRegMorphism& R, bool& so_agree) {
  using namespace oracle;
  Pairs E = pairs(R.src().congruence()), F = pairs(R.tgt().congruence());
  Pairs lo = pairs(R.lower()), up = pairs(R.upper());
  Pairs gr = meet(lo, opposite(up));
  MapClass c;
  c.is_ff = compose(up, lo) == E;
  c.is_so = compose(lo, up) == F;
  so_agree = (compose(gr, opposite(gr)) == meet(F, opposite(F))) == c.is_so;
  c.is_iso = c.is_ff && c.is_so;
  return c;
}

MapClass classify_by_realization(const ExRegMorphism& R) {
  Realization P = quotient_realize(R.src()), Q = quotient_realize(R.tgt());
  MonotoneMap r = realize_morphism(R, P, Q);
  MapClass c;
  c.is_ff = order_embedding(oracle::order(P.poset), oracle::order(Q.poset), r.assign());
  c.is_so = surjective(r.assign(), Q.poset.size());
  c.is_iso = c.is_ff && c.is_so;
  return c;
}

Outcome exreg_structure() {
  Outcome o;
  Tally& t = o.tally;
  Generator g(505);
  using namespace oracle;
  std::size_t facts = 0, stab = 0, cls = 0;
  for (; facts < 200; ++facts) {
    ExRegMorphism R = g.exreg_morphism(4);
    Factorization F = factorize(R);
    t.expect(F.tab.leg0 == F.tab.leg1, "legs of the tabulation of RR° differ");
    t.expect(compose(pairs(F.ff.lower()), pairs(F.so.lower())) == pairs(R.lower()) &&
                 compose(pairs(F.so.upper()), pairs(F.ff.upper())) == pairs(R.upper()),
             "factorization does not compose to R");
    MapClass q = classify_by_realization(F.so), m = classify_by_realization(F.ff);
    t.expect(q.is_so && m.is_ff, "factorization legs are not so and ff");
  }
  for (; stab < 100; ++stab) {
    ExRegMorphism Q = factorize(g.exreg_morphism(4)).so;
    ExRegMorphism S = g.exreg_morphism_into(Q.tgt(), 3);
    ExRegLimit L = limit_pullback(Q, S);
    t.expect(L.legs[1].tgt() == S.src(), "pullback leg has the wrong target");
    t.expect(classify_by_realization(L.legs[1]).is_so, "pulled back so-morphism is not so");
    // the realized square is a pullback of sets of classes
    Realization rq = quotient_realize(Q.src()), rs = quotient_realize(S.src()), rt = quotient_realize(Q.tgt()),
                rl = quotient_realize(L.apex);
    MonotoneMap q = realize_morphism(Q, rq, rt), s = realize_morphism(S, rs, rt);
    MonotoneMap l0 = realize_morphism(L.legs[0], rl, rq), l1 = realize_morphism(L.legs[1], rl, rs);
    std::set<std::pair<std::size_t, std::size_t>> want, got;
    for (std::size_t a = 0; a < rq.poset.size(); ++a)
      for (std::size_t b = 0; b < rs.poset.size(); ++b)
        if (q(a) == s(b)) want.emplace(a, b);
    for (std::size_t p = 0; p < rl.poset.size(); ++p) got.emplace(l0(p), l1(p));
    t.expect(got == want && got.size() == rl.poset.size(), "realized pullback differs from the set oracle");
  }
  for (; cls < 200; ++cls) {
    // mix in so and ff morphisms so both sides of each biconditional occur
    ExRegMorphism R = g.exreg_morphism(4);
    if (cls % 3 == 1) R = factorize(R).so;
    if (cls % 3 == 2) R = factorize(R).ff;
    bool so_agree = false;
    MapClass a = classify(R), b = classify_by_sets(R, so_agree), c = classify_by_realization(R);
    t.expect(so_agree, "the two so equations disagree");
    t.expect(a == b, "classification differs from the set equations");
    t.expect(b == c, "set equations differ from the realized map");
  }
  o.counts = cnt(facts, "factorizations") + ", " + cnt(stab, "pullbacks") + ", " + cnt(cls, "classifications");
  return o;
}

// ---- 6. exactness ----------------------------------------------------------------

Outcome exactness() {
  Outcome o;
  Tally& t = o.tally;
  Generator g(606);
  using namespace oracle;
  std::size_t splits = 0, presentations = 0, tests = 0;
  const Mat Zs[] = {order(chain(2)), order(chain(3))};
  for (; splits < 200; ++splits) {
    ExRegObject A = g.exreg_object(4);
    Relation R = g.congruence_over(A.congruence());
    Pairs r = pairs(R);
    t.expect(subset(pairs(A.congruence()), r), "generated R does not contain E");
    Splitting s = split_congruence(A, R);
    t.expect(compose(pairs(s.section.rel), pairs(s.quotient.lower())) == r, "splitting legs do not compose to R");
    t.expect(compose(pairs(s.quotient.lower()), pairs(s.quotient.upper())) == r, "quotient leg is not so");
    t.expect(classify_by_realization(s.quotient).is_so, "realized quotient leg is not surjective");
    t.expect(compose(pairs(s.quotient.upper()), pairs(s.quotient.lower())) == r, "kernel of the quotient is not R");
    Reflection ref = reflect(to_mat(R.matrix()));
    t.expect(order(quotient_realize(s.middle).poset) == ref.order, "middle object is not the FinPos quotient");
  }
  for (; presentations < 200; ++presentations) {
    ExRegObject A = g.exreg_object(4);
    Presentation p = canonical_presentation(A);
    Mat X = order(A.carrier());
    Mat E = to_mat(A.congruence().matrix());
    // comma: the pairs of E ordered componentwise
    std::vector<std::pair<std::size_t, std::size_t>> pts;
    for (std::size_t a = 0; a < X.size(); ++a)
      for (std::size_t b = 0; b < X.size(); ++b)
        if (E[a][b]) pts.emplace_back(a, b);
    t.expect(p.pairs.size() == pts.size(), "comma object has the wrong size");
    for (std::size_t i = 0; i < p.pairs.size(); ++i)
      for (std::size_t j = 0; j < p.pairs.size(); ++j)
        t.expect(p.pairs.leq(i, j) == (X[p.e0(i)][p.e0(j)] && X[p.e1(i)][p.e1(j)]), "comma order");
    std::set<std::pair<std::size_t, std::size_t>> got;
    for (std::size_t i = 0; i < p.pairs.size(); ++i) got.emplace(p.e0(i), p.e1(i));
    t.expect(got == std::set<std::pair<std::size_t, std::size_t>>(pts.begin(), pts.end()), "comma points");
    // comma universal property: every pair of maps from a test stage with E(u z, v z) factors once
    for (std::size_t len : {1U, 2U}) {
      Mat S = order(chain(len));
      auto maps = monotone_maps(S, X);
      for (const auto& u : maps)
        for (const auto& v : maps) {
          bool cone = true;
          for (std::size_t z = 0; z < len && cone; ++z) cone = E[u[z]][v[z]];
          std::size_t count = 0;
          for (const auto& w : monotone_maps(S, order(p.pairs))) {
            bool ok = true;
            for (std::size_t z = 0; z < len && ok; ++z) ok = p.e0(w[z]) == u[z] && p.e1(w[z]) == v[z];
            count += ok ? 1 : 0;
          }
          t.expect(count == (cone ? 1U : 0U), "comma factorization count");
          ++tests;
        }
    }
    // coinserter: the realized cover is the reflection of E, and it is universal
    Realization rc = quotient_realize(A);
    MonotoneMap q = realize_morphism(p.cover, quotient_realize(gamma(A.carrier())), rc);
    Reflection ref = reflect(E);
    t.expect(q.assign() == ref.cls && order(rc.poset) == ref.order, "cover is not the reflection of E");
    for (const Mat& Z : Zs) {
      auto counts = factor_counts(q.assign(), order(rc.poset), Z);
      for (const auto& gm : monotone_maps(X, Z)) {
        bool cocone = true;
        for (auto [a, b] : pts) cocone = cocone && Z[gm[a]][gm[b]];
        auto it = counts.find(gm);
        t.expect((it == counts.end() ? 0U : it->second) == (cocone ? 1U : 0U), "coinserter factorization count");
        ++tests;
      }
    }
    if (presentations < 40) t.expect(verify_presentation(p, 2).ok, "engine presentation check");
  }
  o.counts = cnt(splits, "splittings") + ", " + cnt(presentations, "presentations") + " (" +
             cnt(tests, "enumerated test maps") + ")";
  return o;
}

// ---- 7. Set_ex/reg against Pos ----------------------------------------------------

Outcome set_pos() {
  Outcome o;
  Tally& t = o.tally;
  Report rep = verify_characterization(BaseFunctor::DiscreteInclusion, 4, 100, 7, 5);
  for (const auto& l : rep.lines) t.expect(l.ok, "engine report: " + l.check + " " + l.detail);

  Generator g(707);
  using namespace oracle;
  std::size_t pairs_checked = 0;
  for (; pairs_checked < 100; ++pairs_checked) {
    FinPoset X = discrete(g.uniform(0, 4)), Y = discrete(g.uniform(0, 4));
    ExRegObject A(X, g.congruence(X, 0.3)), B(Y, g.congruence(Y, 0.3));
    Reflection ra = reflect(to_mat(A.congruence().matrix())), rb = reflect(to_mat(B.congruence().matrix()));
    auto maps = monotone_maps(ra.order, rb.order);
    auto ms = enumerate_morphisms(A, B);
    t.expect(ms.size() == maps.size(), "hom sizes differ");
    if (ms.size() != maps.size()) continue;
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < maps.size(); ++i) index[maps[i]] = i;
    // lower relations are unions of class blocks, so the map can be read off directly
    std::vector<std::size_t> at;
    std::set<std::size_t> seen;
    for (const auto& R : ms) {
      Pairs gr = meet(pairs(R.lower()), opposite(pairs(R.upper())));
      std::vector<std::size_t> f(ra.order.size(), rb.order.size());
      for (auto [x, y] : gr) f[ra.cls[x]] = rb.cls[y];
      auto it = index.find(f);
      t.expect(it != index.end(), "morphism graph is not a monotone map of classes");
      if (it == index.end()) break;
      t.expect(seen.insert(it->second).second, "two morphisms realize the same map");
      at.push_back(it->second);
    }
    if (at.size() != ms.size()) continue;
    Mat got = order(morphism_poset(ms)), want = pointwise(maps, rb.order);
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = 0; j < ms.size(); ++j)
        t.expect(got[i][j] == want[at[i]][at[j]], "hom-poset orders differ");
  }

  // every poset with at most 5 elements is the realization of a discrete-carrier object
  std::size_t objects = 0, classes = 0;
  for (std::size_t n = 0; n <= 5; ++n) {
    std::set<std::vector<bool>> realized;
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) slots.emplace_back(i, j);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      Pairs ps;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask >> s & 1) ps.insert(slots[s]);
      Mat m = reflexive_transitive(n, ps);
      if (pairs(m).size() != ps.size() + n) continue;  // not transitive
      ++objects;
      Mat ord = reflect(m).order;
      if (ord.size() != n) continue;  // only count quotients of full size here
      FinPoset D = discrete(n);
      BoolMatrix e(n, n);
      for (auto [a, b] : pairs(m)) e.set(a, b);
      FinPoset Q = lift_object(BaseFunctor::DiscreteInclusion, ExRegObject(D, Relation(D, D, e))).cod();
      t.expect(order(Q) == ord, "lifted object differs from the reflection");
      realized.insert(canonical_form(ord));
    }
    t.expect(realized.size() == poset_counts[n], "posets on " + std::to_string(n) + " elements: " +
                                                      std::to_string(realized.size()) + " realized");
    classes += realized.size();
  }
  o.counts = cnt(rep.lines.size(), "engine checks") + ", " + cnt(pairs_checked, "object pairs") + ", " +
             cnt(objects, "discrete objects") + " realizing " + cnt(classes, "iso classes");
  return o;
}

// ---- 8. Ord commutation ------------------------------------------------------------

Outcome ord_commutation() {
  Outcome o;
  Tally& t = o.tally;
  Report rep = commutation_check(4);
  for (const auto& l : rep.lines) t.expect(l.ok, "engine report: " + l.check + " " + l.detail);
  using namespace oracle;
  auto objs = posets_up_to(4);
  std::size_t homs = 0, prods = 0, ins = 0, facts = 0;
  for (const auto& P : objs)
    for (const auto& Q : objs) {
      Mat mp = order(P), mq = order(Q);
      OrdObject X = to_ord(P), Y = to_ord(Q);
      OrdHom h = ord_hom(X, Y);
      auto maps = monotone_maps(mp, mq);
      std::map<std::vector<std::size_t>, std::size_t> index;
      for (std::size_t i = 0; i < maps.size(); ++i) index[maps[i]] = i;
      t.expect(h.maps.size() == maps.size(), "Ord hom size");
      Mat pw = pointwise(maps, mq);
      for (std::size_t i = 0; i < h.maps.size() && h.maps.size() == maps.size(); ++i)
        for (std::size_t j = 0; j < h.maps.size(); ++j) {
          auto a = index.find(h.maps[i].f), b = index.find(h.maps[j].f);
          t.expect(a != index.end() && b != index.end(), "Ord hom contains a non-monotone map");
          if (a != index.end() && b != index.end())
            t.expect(h.leq.test(i, j) == pw[a->second][b->second], "Ord hom order");
        }
      ++homs;
      OrdSpan sp = ord_product(X, Y);
      t.expect(sp.apex.size() == P.size() * Q.size(), "Ord product size");
      for (auto [u, v] : sp.apex.order())
        t.expect(mp[sp.p0(u)][sp.p0(v)] && mq[sp.p1(u)][sp.p1(v)], "Ord product order too large");
      std::size_t expected_pairs = 0;
      for (std::size_t a = 0; a < P.size(); ++a)
        for (std::size_t b = 0; b < P.size(); ++b)
          if (mp[a][b]) expected_pairs += pairs(mq).size();
      t.expect(sp.apex.order().size() == expected_pairs, "Ord product order too small");
      ++prods;
      if (P.size() > 3 || Q.size() > 3) continue;
      for (const auto& f : h.maps) {
        auto [e, m] = ord_image_factorize(f);
        std::set<std::size_t> img(f.f.begin(), f.f.end());
        t.expect(std::set<std::size_t>(m.f.begin(), m.f.end()) == img && m.f.size() == img.size(),
                 "Ord image is not the set image");
        for (std::size_t x = 0; x < f.f.size(); ++x) t.expect(m(e(x)) == f(x), "Ord factorization composes");
        t.expect(order_embedding(order(to_finpos(m.dom)), mq, m.f), "Ord image leg is not an embedding");
        ++facts;
        for (const auto& k : h.maps) {
          OrdMap i = ord_inserter(f, k);
          std::vector<std::size_t> want;
          for (std::size_t x = 0; x < P.size(); ++x)
            if (mq[f(x)][k(x)]) want.push_back(x);
          t.expect(i.f == want, "Ord inserter differs from {x : f x <= g x}");
          t.expect(order_embedding(order(to_finpos(i.dom)), mp, i.f), "Ord inserter order");
          ++ins;
        }
      }
    }
  o.counts = cnt(rep.lines.size(), "engine checks") + ", " + cnt(homs, "hom pairs") + ", " + cnt(prods, "products") +
             ", " + cnt(ins, "inserters") + ", " + cnt(facts, "factorizations");
  return o;
}

// ---- 9. determinism ------------------------------------------------------------------

struct RunResult {
  int status = -1;
  std::string out;
  double seconds = 0;
};

RunResult run_command(const std::string& cmd) {
  RunResult r;
  auto start = Clock::now();
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) r.out.append(buf.data(), n);
  r.status = pclose(p);
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

Outcome determinism(const std::string& cli) {
  Outcome o;
  Tally& t = o.tally;
  const std::string cmd = "\"" + cli + "\" harness run all --trials 100 --seed 1";
  RunResult a = run_command(cmd), b = run_command(cmd);
  t.expect(a.status == 0 && b.status == 0, "harness run exited with status " + std::to_string(a.status) + "/" +
                                               std::to_string(b.status));
  t.expect(!a.out.empty() && a.out == b.out, "reports differ between runs");
  t.expect(a.out.find("0 gaps") != std::string::npos, "coverage gaps reported");
  t.expect(a.seconds < 120 && b.seconds < 120, "a harness run took longer than 2 minutes");
  std::ostringstream c;
  c.setf(std::ios::fixed);
  c.precision(2);
  c << "2 runs of " << a.out.size() << " bytes, " << a.seconds << " s and " << b.seconds << " s";
  o.counts = c.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <exreg executable>\n";
    return 2;
  }
  const std::string cli = argv[1];
  bool ok = true;
  ok &= run_criterion(1, "FinPos regularity", 20, finpos_regularity);
  ok &= run_criterion(2, "relation laws", 15, relation_laws);
  ok &= run_criterion(3, "maps theorem", 30, maps_theorem);
  ok &= run_criterion(4, "tabulations", 30, tabulations);
  ok &= run_criterion(5, "exact completion structure", 30, exreg_structure);
  ok &= run_criterion(6, "exactness", 20, exactness);
  ok &= run_criterion(7, "Set_ex/reg against Pos, bound 4", 60, set_pos);
  ok &= run_criterion(8, "Ord commutation, bound 4", 30, ord_commutation);
  ok &= run_criterion(9, "determinism of the full harness", 240, [&] { return determinism(cli); });
  return ok ? 0 : 1;
}
