// Batch front-end over the engine. Exit codes: 0 success, 1 a law or
// property failed, 2 bad input.

#include <CLI11.hpp>

#include <exreg/equivalence.hpp>
#include <exreg/suites.hpp>

#include <cstdlib>
#include <deque>
#include <iostream>

namespace {

using namespace exreg;

// A law or property check came out false; exit status 1.
struct CheckFailed {};

struct Context {
  std::deque<std::string> strings;  // stable storage for option targets
  std::deque<std::size_t> sizes;
  std::deque<bool> flags;
  std::function<int()> action;
};

std::size_t default_bound(std::size_t fallback) {
  if (const char* env = std::getenv("EXREG_BOUND")) {
    std::string s(env);
    if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos && s.size() < 4)
      return std::stoul(s);
    fail(ErrorCode::ParseError, "EXREG_BOUND must be a small non-negative integer, got '" + s + "'");
  }
  return fallback;
}

std::string& positional(Context& ctx, CLI::App* c, const std::string& name, const std::string& desc) {
  std::string& s = ctx.strings.emplace_back();
  c->add_option(name, s, desc)->required();
  return s;
}

// Output destination shared by the bundle-producing commands.
struct Output {
  std::string* dir;
  std::string* dot;
};

Output add_output(Context& ctx, CLI::App* c, bool dot) {
  Output o{&ctx.strings.emplace_back(), &ctx.strings.emplace_back()};
  c->add_option("--out", *o.dir, "write the files into DIR instead of printing them");
  if (dot) c->add_option("--dot", *o.dot, "also write a DOT drawing of the main result");
  return o;
}

void emit(const Output& o, const Artifacts& a) {
  if (!o.dir->empty()) {
    a.bundle().write_to(*o.dir);
    std::cout << "wrote " << a.bundle().files.size() << " files to " << *o.dir << "\n";
  } else {
    std::cout << a.str();
  }
}

template <class F>
void emit_dot(const Output& o, F&& writer) {
  if (o.dot->empty()) return;
  std::ofstream out(*o.dot);
  if (!out) fail(ErrorCode::ParseError, *o.dot + ":0: cannot write file");
  writer(out);
}

const char* yes(bool b) { return b ? "yes" : "no"; }

void print_class(const MapClass& c) {
  std::cout << "ff " << yes(c.is_ff) << "\nso " << yes(c.is_so) << "\niso " << yes(c.is_iso) << "\n";
}

MonotoneMap read_map(const std::string& path) { return read_map_file(path).map; }

// Spans come out as apex plus two legs into copies of the inputs.
void add_span(Artifacts& a, const Span& s, const FinPoset& A, const FinPoset& B) {
  std::string apex = a.poset("apex", s.apex);
  a.map("p0", s.p0, apex, a.poset("A", A));
  a.map("p1", s.p1, apex, a.poset("B", B));
}

void add_limit(Artifacts& a, const ExRegLimit& L, const std::vector<ExRegObject>& targets) {
  std::string apex = a.object("apex", L.apex);
  for (std::size_t i = 0; i < L.legs.size(); ++i) {
    std::string t = a.object(std::string(1, static_cast<char>('A' + i)), targets[i]);
    a.morphism("leg" + std::to_string(i), L.legs[i], apex, t);
  }
}

// ---- poset ----------------------------------------------------------------

void poset_commands(Context& ctx, CLI::App& app) {
  CLI::App* P = app.add_subcommand("poset", "finite posets and monotone maps");
  P->require_subcommand(1);

  {
    CLI::App* c = P->add_subcommand("check", "parse a .poset file and summarize it");
    auto& file = positional(ctx, c, "file", ".poset file");
    Output o = add_output(ctx, c, true);
    c->callback([&ctx, &file, o] {
      ctx.action = [&file, o] {
        FinPoset X = read_poset_file(file);
        std::cout << "elements " << X.size() << "\ncovers " << cover_pairs(X).size() << "\ndiscrete "
                  << yes(is_discrete(X)) << "\n";
        emit_dot(o, [&](std::ostream& os) { write_poset_dot(os, X, file); });
        return 0;
      };
    });
  }
  {
    CLI::App* c = P->add_subcommand("classify", "ff / so / iso of a monotone map");
    auto& file = positional(ctx, c, "map", ".map file");
    c->callback([&ctx, &file] {
      ctx.action = [&file] {
        print_class(classify_map(read_map(file)));
        return 0;
      };
    });
  }
  {
    CLI::App* c = P->add_subcommand("product", "binary product with projections");
    auto& a = positional(ctx, c, "A", ".poset file");
    auto& b = positional(ctx, c, "B", ".poset file");
    Output o = add_output(ctx, c, true);
    c->callback([&ctx, &a, &b, o] {
      ctx.action = [&a, &b, o] {
        FinPoset A = read_poset_file(a), B = read_poset_file(b);
        Span s = product(A, B);
        Artifacts out;
        add_span(out, s, A, B);
        emit(o, out);
        emit_dot(o, [&](std::ostream& os) { write_poset_dot(os, s.apex, "product"); });
        return 0;
      };
    });
  }
  // Subobject-valued limits of a parallel pair.
  auto parallel = [&](const char* name, const char* desc, bool via_option) {
    CLI::App* c = P->add_subcommand(name, desc);
    auto& f = positional(ctx, c, "f", ".map file");
    auto& g = positional(ctx, c, "g", ".map file");
    bool& via = ctx.flags.emplace_back(false);
    if (via_option) c->add_flag("--via-inserters", via, "build from inserters");
    Output o = add_output(ctx, c, true);
    std::string kind = name;
    c->callback([&ctx, &f, &g, &via, o, kind] {
      ctx.action = [&f, &g, &via, o, kind] {
        MonotoneMap F = read_map(f), G = read_map(g);
        require_parallel(F, G);
        MonotoneMap m = kind == "inserter" ? inserter(F, G) : via ? equalizer_via_inserters(F, G) : equalizer(F, G);
        Artifacts out;
        std::string sub = out.poset(kind, m.dom()), x = out.poset("X", F.dom());
        out.map("incl", m, sub, x);
        emit(o, out);
        emit_dot(o, [&](std::ostream& os) { write_poset_dot(os, m.dom(), kind); });
        return 0;
      };
    });
  };
  parallel("inserter", "inserter {x : f x <= g x}", false);
  parallel("equalizer", "equalizer {x : f x = g x}", true);

  auto cospan = [&](const char* name, const char* desc) {
    CLI::App* c = P->add_subcommand(name, desc);
    auto& f = positional(ctx, c, "f", ".map file");
    auto& g = positional(ctx, c, "g", ".map file");
    Output o = add_output(ctx, c, true);
    std::string kind = name;
    c->callback([&ctx, &f, &g, o, kind] {
      ctx.action = [&f, &g, o, kind] {
        MonotoneMap F = read_map(f), G = read_map(g);
        Span s = kind == "comma" ? comma(F, G) : pullback(F, G);
        Artifacts out;
        add_span(out, s, F.dom(), G.dom());
        emit(o, out);
        emit_dot(o, [&](std::ostream& os) { write_poset_dot(os, s.apex, kind); });
        return 0;
      };
    });
  };
  cospan("comma", "comma object f/g");
  cospan("pullback", "pullback of a cospan");
  {
    CLI::App* c = P->add_subcommand("kernel", "kernel congruence f/f");
    auto& f = positional(ctx, c, "f", ".map file");
    Output o = add_output(ctx, c, true);
    c->callback([&ctx, &f, o] {
      ctx.action = [&f, o] {
        MonotoneMap F = read_map(f);
        Span s = kernel_congruence(F);
        Artifacts out;
        add_span(out, s, F.dom(), F.dom());
        emit(o, out);
        emit_dot(o, [&](std::ostream& os) { write_poset_dot(os, s.apex, "kernel"); });
        return 0;
      };
    });
  }
  {
    CLI::App* c = P->add_subcommand("factor", "image factorization f = m e");
    auto& f = positional(ctx, c, "f", ".map file");
    Output o = add_output(ctx, c, true);
    c->callback([&ctx, &f, o] {
      ctx.action = [&f, o] {
        MonotoneMap F = read_map(f);
        auto [e, m] = image_factorize(F);
        Artifacts out;
        std::string img = out.poset("image", e.cod());
        out.map("e", e, out.poset("X", F.dom()), img);
        out.map("m", m, img, out.poset("Y", F.cod()));
        emit(o, out);
        emit_dot(o, [&](std::ostream& os) { write_poset_dot(os, e.cod(), "image"); });
        return 0;
      };
    });
  }
  {
    CLI::App* c = P->add_subcommand("coinserter", "coinserter of a parallel pair");
    auto& f = positional(ctx, c, "f0", ".map file");
    auto& g = positional(ctx, c, "f1", ".map file");
    Output o = add_output(ctx, c, true);
    c->callback([&ctx, &f, &g, o] {
      ctx.action = [&f, &g, o] {
        MonotoneMap q = coinserter(read_map(f), read_map(g));
        Artifacts out;
        std::string y = out.poset("Y", q.dom()), quo = out.poset("quotient", q.cod());
        out.map("q", q, y, quo);
        emit(o, out);
        emit_dot(o, [&](std::ostream& os) { write_poset_dot(os, q.cod(), "coinserter"); });
        return 0;
      };
    });
  }
  // Hom-posets list their elements as comments; the file still parses.
  auto hom_like = [&](const char* name, const char* desc, bool power_mode) {
    CLI::App* c = P->add_subcommand(name, desc);
    auto& a = positional(ctx, c, power_mode ? "X" : "A", ".poset file");
    auto& b = positional(ctx, c, power_mode ? "P" : "B", ".poset file");
    bool& via = ctx.flags.emplace_back(false);
    if (power_mode) c->add_flag("--via-inserters", via, "build X^P as an inserter into a product");
    Output o = add_output(ctx, c, true);
    c->callback([&ctx, &a, &b, &via, o, power_mode] {
      ctx.action = [&a, &b, &via, o, power_mode] {
        FinPoset A = read_poset_file(a), B = read_poset_file(b);
        // power X P is hom(P, X)
        HomPoset h = power_mode ? hom_poset(B, A) : hom_poset(A, B);
        FinPoset result = h.poset;
        if (power_mode && via) result = power_via_inserters(A, B).dom();
        std::string text = poset_text(result);
        if (!(power_mode && via))
          for (std::size_t i = 0; i < h.maps.size(); ++i) {
            text += "# " + std::to_string(i) + ":";
            for (std::size_t v : h.maps[i].assign()) text += " " + std::to_string(v);
            text += "\n";
          }
        Artifacts out;
        out.note(power_mode ? "power.poset" : "hom.poset", text);
        emit(o, out);
        emit_dot(o, [&](std::ostream& os) { write_poset_dot(os, result, power_mode ? "power" : "hom"); });
        return 0;
      };
    });
  };
  hom_like("hom", "poset of monotone maps A -> B, pointwise order", false);
  hom_like("power", "power X^P", true);
  {
    CLI::App* c = P->add_subcommand("iso", "find an isomorphism P -> Q (exit 1 if none)");
    auto& a = positional(ctx, c, "P", ".poset file");
    auto& b = positional(ctx, c, "Q", ".poset file");
    Output o = add_output(ctx, c, false);
    c->callback([&ctx, &a, &b, o] {
      ctx.action = [&a, &b, o] {
        FinPoset A = read_poset_file(a), B = read_poset_file(b);
        auto iso = find_iso(A, B);
        if (!iso) {
          std::cout << "not isomorphic\n";
          return 1;
        }
        Artifacts out;
        std::string p = out.poset("P", A), q = out.poset("Q", B);
        out.map("iso", *iso, p, q);
        emit(o, out);
        return 0;
      };
    });
  }
}

// ---- rel ------------------------------------------------------------------

void emit_relation(const Output& o, const std::string& stem, const Relation& R) {
  Artifacts out;
  std::string dom = out.poset("dom", R.dom());
  std::string cod = out.poset("cod", R.cod());
  out.rel(stem, R, dom, cod);
  emit(o, out);
  emit_dot(o, [&](std::ostream& os) { write_relation_dot(os, R, stem); });
}

void rel_commands(Context& ctx, CLI::App& app) {
  CLI::App* Rl = app.add_subcommand("rel", "relations between finite posets");
  Rl->require_subcommand(1);

  {
    CLI::App* c = Rl->add_subcommand("check", "parse a .rel file and summarize it");
    auto& file = positional(ctx, c, "file", ".rel file");
    Output o = add_output(ctx, c, true);
    c->callback([&ctx, &file, o] {
      ctx.action = [&file, o] {
        Relation R = read_rel_file(file).rel;
        std::cout << "dom " << R.dom().size() << "\ncod " << R.cod().size() << "\npairs " << R.size()
                  << "\nweakening-closed " << yes(R.is_weakening_closed()) << "\n";
        emit_dot(o, [&](std::ostream& os) { write_relation_dot(os, R, file); });
        return 0;
      };
    });
  }
  auto binary = [&](const char* name, const char* desc, std::function<Relation(const Relation&, const Relation&)> op) {
    CLI::App* c = Rl->add_subcommand(name, desc);
    auto& s = positional(ctx, c, "S", ".rel file");
    auto& r = positional(ctx, c, "R", ".rel file");
    Output o = add_output(ctx, c, true);
    std::string stem = name;
    c->callback([&ctx, &s, &r, o, op, stem] {
      ctx.action = [&s, &r, o, op, stem] {
        emit_relation(o, stem, op(read_rel_file(s).rel, read_rel_file(r).rel));
        return 0;
      };
    });
  };
  binary("compose", "composite S R (R first)", [](const Relation& S, const Relation& R) { return compose(S, R); });
  binary("meet", "intersection of parallel relations", [](const Relation& S, const Relation& R) { return meet(S, R); });
  {
    CLI::App* c = Rl->add_subcommand("opposite", "converse relation");
    auto& r = positional(ctx, c, "R", ".rel file");
    Output o = add_output(ctx, c, true);
    c->callback([&ctx, &r, o] {
      ctx.action = [&r, o] {
        emit_relation(o, "opposite", opposite(read_rel_file(r).rel));
        return 0;
      };
    });
  }
  {
    CLI::App* c = Rl->add_subcommand("hyper", "hypergraph f_* and hypograph f^* of a map");
    auto& f = positional(ctx, c, "map", ".map file");
    Output o = add_output(ctx, c, false);
    c->callback([&ctx, &f, o] {
      ctx.action = [&f, o] {
        MonotoneMap F = read_map(f);
        Artifacts out;
        std::string x = out.poset("X", F.dom()), y = out.poset("Y", F.cod());
        out.rel("lower", hypergraph(F), x, y);
        out.rel("upper", hypograph(F), y, x);
        emit(o, out);
        return 0;
      };
    });
  }
  {
    CLI::App* c = Rl->add_subcommand("modular", "check the modular law and its dual on P: X->Y, Q: Y->Z, S: X->Z");
    auto& p = positional(ctx, c, "P", ".rel file");
    auto& q = positional(ctx, c, "Q", ".rel file");
    auto& s = positional(ctx, c, "S", ".rel file");
    c->callback([&ctx, &p, &q, &s] {
      ctx.action = [&p, &q, &s] {
        auto r = check_modular_law(read_rel_file(p).rel, read_rel_file(q).rel, read_rel_file(s).rel);
        auto line = [](const char* name, const InclusionReport& ir) {
          std::cout << name << " " << (ir.holds ? "holds" : "fails");
          if (ir.witness) std::cout << " at (" << ir.witness->first << "," << ir.witness->second << ")";
          std::cout << "\n";
        };
        line("modular", r.ml);
        line("modular-dual", r.ml_star);
        return r.holds() ? 0 : 1;
      };
    });
  }
  {
    CLI::App* c = Rl->add_subcommand("adjoint", "right adjoint of a weakening-closed relation (exit 1 if none)");
    auto& r = positional(ctx, c, "phi", ".rel file");
    Output o = add_output(ctx, c, true);
    c->callback([&ctx, &r, o] {
      ctx.action = [&r, o] {
        auto psi = right_adjoint(read_rel_file(r).rel);
        if (!psi) {
          std::cout << "no right adjoint\n";
          return 1;
        }
        emit_relation(o, "adjoint", *psi);
        return 0;
      };
    });
  }
  {
    CLI::App* c = Rl->add_subcommand("extract", "the map with hypergraph phi and hypograph psi");
    auto& phi = positional(ctx, c, "phi", ".rel file");
    auto& psi = positional(ctx, c, "psi", ".rel file");
    Output o = add_output(ctx, c, false);
    c->callback([&ctx, &phi, &psi, o] {
      ctx.action = [&phi, &psi, o] {
        MonotoneMap f = extract_map(read_rel_file(phi).rel, read_rel_file(psi).rel);
        Artifacts out;
        std::string x = out.poset("X", f.dom()), y = out.poset("Y", f.cod());
        out.map("f", f, x, y);
        emit(o, out);
        return 0;
      };
    });
  }
  {
    CLI::App* c = Rl->add_subcommand("kernel", "compare f^* f_* with the comma f/f (exit 1 if they differ)");
    auto& f = positional(ctx, c, "map", ".map file");
    Output o = add_output(ctx, c, false);
    c->callback([&ctx, &f, o] {
      ctx.action = [&f, o] {
        MonotoneMap F = read_map(f);
        bool ok = kernel_identity_check(F);
        Artifacts out;
        std::string x = out.poset("X", F.dom());
        out.rel("kernel", compose(hypograph(F), hypergraph(F)), x, x);
        emit(o, out);
        std::cout << "kernel-identity " << (ok ? "holds" : "fails") << "\n";
        return ok ? 0 : 1;
      };
    });
  }
}

// ---- exreg ----------------------------------------------------------------

void exreg_commands(Context& ctx, CLI::App& app) {
  CLI::App* E = app.add_subcommand("exreg", "objects and morphisms of the completion");
  E->require_subcommand(1);

  {
    CLI::App* c = E->add_subcommand("check", "parse an .exreg file and summarize it");
    auto& file = positional(ctx, c, "file", ".exreg file");
    Output o = add_output(ctx, c, true);
    c->callback([&ctx, &file, o] {
      ctx.action = [&file, o] {
        ExRegFile f = read_exreg_file(file);
        if (auto* of = std::get_if<ObjectFile>(&f)) {
          const ExRegObject& A = of->object;
          Realization q = quotient_realize(A);
          std::cout << "object\ncarrier " << A.size() << "\ncongruence " << A.congruence().size()
                    << "\nquotient " << q.poset.size() << "\n";
          emit_dot(o, [&](std::ostream& os) { write_relation_dot(os, A.congruence(), file); });
        } else {
          const ExRegMorphism& R = std::get<MorphismFile>(f).morphism;
          std::cout << "morphism\nsrc " << R.src().size() << "\ntgt " << R.tgt().size() << "\nlower "
                    << R.lower().size() << "\nupper " << R.upper().size() << "\n";
          emit_dot(o, [&](std::ostream& os) { write_relation_dot(os, R.lower(), file); });
        }
        return 0;
      };
    });
  }
  {
    CLI::App* c = E->add_subcommand("compose", "composite S R (R first)");
    auto& s = positional(ctx, c, "S", "morphism file");
    auto& r = positional(ctx, c, "R", "morphism file");
    Output o = add_output(ctx, c, false);
    c->callback([&ctx, &s, &r, o] {
      ctx.action = [&s, &r, o] {
        ExRegMorphism SR = compose(read_morphism_file(s).morphism, read_morphism_file(r).morphism);
        Artifacts out;
        out.morphism("composite", SR);
        emit(o, out);
        return 0;
      };
    });
  }
  {
    CLI::App* c = E->add_subcommand("classify", "ff / so / iso of a morphism");
    auto& r = positional(ctx, c, "R", "morphism file");
    c->callback([&ctx, &r] {
      ctx.action = [&r] {
        print_class(classify(read_morphism_file(r).morphism));
        return 0;
      };
    });
  }
  {
    CLI::App* c = E->add_subcommand("realize", "quotient poset of an object, or the monotone map of a morphism");
    auto& file = positional(ctx, c, "file", ".exreg file");
    Output o = add_output(ctx, c, true);
    c->callback([&ctx, &file, o] {
      ctx.action = [&file, o] {
        ExRegFile f = read_exreg_file(file);
        Artifacts out;
        FinPoset shown;
        if (auto* of = std::get_if<ObjectFile>(&f)) {
          Realization q = quotient_realize(of->object);
          std::string x = out.poset("carrier", of->object.carrier()), quo = out.poset("quotient", q.poset);
          out.map("projection", q.projection, x, quo);
          shown = q.poset;
        } else {
          const ExRegMorphism& R = std::get<MorphismFile>(f).morphism;
          MonotoneMap m = realize_morphism(R);
          std::string s = out.poset("src.quotient", m.dom()), t = out.poset("tgt.quotient", m.cod());
          out.map("realized", m, s, t);
          shown = m.cod();
        }
        emit(o, out);
        emit_dot(o, [&](std::ostream& os) { write_poset_dot(os, shown, "quotient"); });
        return 0;
      };
    });
  }
  {
    CLI::App* c = E->add_subcommand("graph", "graph R_* ∩ (R^*)° of a morphism");
    auto& r = positional(ctx, c, "R", "morphism file");
    Output o = add_output(ctx, c, true);
    c->callback([&ctx, &r, o] {
      ctx.action = [&r, o] {
        emit_relation(o, "graph", graph_of(read_morphism_file(r).morphism));
        return 0;
      };
    });
  }
  {
    CLI::App* c = E->add_subcommand("hom", "hom-poset of morphisms A -> B");
    auto& a = positional(ctx, c, "A", "object file");
    auto& b = positional(ctx, c, "B", "object file");
    Output o = add_output(ctx, c, true);
    c->callback([&ctx, &a, &b, o] {
      ctx.action = [&a, &b, o] {
        ExRegObject A = read_object_file(a).object, B = read_object_file(b).object;
        auto ms = enumerate_morphisms(A, B);
        FinPoset H = morphism_poset(ms);
        Artifacts out;
        std::string src = out.object("A", A), tgt = out.object("B", B);
        out.poset("hom", H);
        for (std::size_t i = 0; i < ms.size(); ++i) out.morphism("m" + std::to_string(i), ms[i], src, tgt);
        emit(o, out);
        emit_dot(o, [&](std::ostream& os) { write_poset_dot(os, H, "hom"); });
        return 0;
      };
    });
  }
  {
    CLI::App* c = E->add_subcommand("lift", "extend a base functor to the completion");
    auto& file = positional(ctx, c, "file", ".exreg file");
    std::string& functor = ctx.strings.emplace_back("discrete");
    c->add_option("--functor", functor, "base functor")->check(CLI::IsMember({"discrete", "identity"}));
    Output o = add_output(ctx, c, false);
    c->callback([&ctx, &file, &functor, o] {
      ctx.action = [&file, &functor, o] {
        BaseFunctor F = functor == "identity" ? BaseFunctor::Identity : BaseFunctor::DiscreteInclusion;
        ExRegFile f = read_exreg_file(file);
        Artifacts out;
        if (auto* of = std::get_if<ObjectFile>(&f)) {
          MonotoneMap q = lift_object(F, of->object);
          std::string x = out.poset("carrier", q.dom()), img = out.poset("image", q.cod());
          out.map("lift", q, x, img);
        } else {
          MonotoneMap m = lift_morphism(F, std::get<MorphismFile>(f).morphism);
          std::string s = out.poset("src.image", m.dom()), t = out.poset("tgt.image", m.cod());
          out.map("lift", m, s, t);
        }
        emit(o, out);
        return 0;
      };
    });
  }
}

// ---- constructions --------------------------------------------------------

std::size_t& add_bound(Context& ctx, CLI::App* c, std::size_t fallback, const char* what) {
  std::size_t& b = ctx.sizes.emplace_back(default_bound(fallback));
  c->add_option("--bound", b, what)->capture_default_str();
  return b;
}

void report_check(const char* what, const UniversalCheck& u) {
  std::cout << what << " " << (u.ok ? "verified" : "FAILED");
  if (!u.ok) std::cout << ": " << u.detail;
  std::cout << "\n";
  if (!u.ok) throw CheckFailed{};
}

void construction_commands(Context& ctx, CLI::App& app) {
  {
    CLI::App* c = app.add_subcommand("tabulate", "tabulation of a Q(E)-morphism phi: SRC -> TGT");
    auto& phi = positional(ctx, c, "phi", ".rel file");
    auto& src = positional(ctx, c, "src", "object file");
    auto& tgt = positional(ctx, c, "tgt", "object file");
    Output o = add_output(ctx, c, false);
    c->callback([&ctx, &phi, &src, &tgt, o] {
      ctx.action = [&phi, &src, &tgt, o] {
        ExRegObject A = read_object_file(src).object, B = read_object_file(tgt).object;
        Tabulation t = tabulate(read_rel_file(phi).rel, A, B);
        Artifacts out;
        std::string s = out.object("src", A), g = out.object("tgt", B), apex = out.object("apex", t.apex);
        out.morphism("leg0", t.leg0, apex, s);
        out.morphism("leg1", t.leg1, apex, g);
        emit(o, out);
        return 0;
      };
    });
  }
  {
    CLI::App* c = app.add_subcommand("factorize", "(so, ff) factorization of a morphism");
    auto& r = positional(ctx, c, "R", "morphism file");
    Output o = add_output(ctx, c, false);
    c->callback([&ctx, &r, o] {
      ctx.action = [&r, o] {
        ExRegMorphism R = read_morphism_file(r).morphism;
        Factorization f = factorize(R);
        Artifacts out;
        std::string s = out.object("src", R.src()), t = out.object("tgt", R.tgt());
        std::string img = out.object("image", f.so.tgt());
        out.morphism("so", f.so, s, img);
        out.morphism("ff", f.ff, img, t);
        emit(o, out);
        return 0;
      };
    });
  }
  {
    CLI::App* c = app.add_subcommand("limit", "finite limits of the completion");
    c->require_subcommand(1);
    auto verify_flags = [&](CLI::App* sub) {
      bool& verify = ctx.flags.emplace_back(false);
      sub->add_flag("--verify", verify, "check the universal property against all small test objects");
      std::size_t& bound = add_bound(ctx, sub, default_cone_bound, "carrier bound for the test objects");
      return std::pair<bool*, std::size_t*>{&verify, &bound};
    };
    {
      CLI::App* s = c->add_subcommand("terminal", "terminal object");
      auto [verify, bound] = verify_flags(s);
      Output o = add_output(ctx, s, false);
      s->callback([&ctx, verify, bound, o] {
        ctx.action = [verify, bound, o] {
          ExRegLimit L = limit_terminal();
          Artifacts out;
          add_limit(out, L, {});
          emit(o, out);
          if (*verify) report_check("terminal", verify_terminal(L, *bound));
          return 0;
        };
      });
    }
    {
      CLI::App* s = c->add_subcommand("product", "binary product of objects");
      auto& a = positional(ctx, s, "A", "object file");
      auto& b = positional(ctx, s, "B", "object file");
      auto [verify, bound] = verify_flags(s);
      Output o = add_output(ctx, s, false);
      s->callback([&ctx, &a, &b, verify, bound, o] {
        ctx.action = [&a, &b, verify, bound, o] {
          ExRegObject A = read_object_file(a).object, B = read_object_file(b).object;
          ExRegLimit L = limit_product(A, B);
          Artifacts out;
          add_limit(out, L, {A, B});
          emit(o, out);
          if (*verify) report_check("product", verify_product(L, A, B, *bound));
          return 0;
        };
      });
    }
    auto pair_limit = [&](const char* name, const char* desc) {
      CLI::App* s = c->add_subcommand(name, desc);
      auto& r = positional(ctx, s, "R", "morphism file");
      auto& t = positional(ctx, s, "S", "morphism file");
      auto [verify, bound] = verify_flags(s);
      Output o = add_output(ctx, s, false);
      std::string kind = name;
      s->callback([&ctx, &r, &t, verify, bound, o, kind] {
        ctx.action = [&r, &t, verify, bound, o, kind] {
          ExRegMorphism R = read_morphism_file(r).morphism, S = read_morphism_file(t).morphism;
          ExRegLimit L = kind == "inserter" ? limit_inserter(R, S)
                         : kind == "comma"  ? limit_comma(R, S)
                                            : limit_pullback(R, S);
          Artifacts out;
          if (kind == "inserter")
            add_limit(out, L, {R.src()});
          else
            add_limit(out, L, {R.src(), S.src()});
          emit(o, out);
          if (*verify) {
            UniversalCheck u = kind == "inserter" ? verify_inserter(L, R, S, *bound)
                               : kind == "comma"  ? verify_comma(L, R, S, *bound)
                                                  : verify_pullback(L, R, S, *bound);
            report_check(kind.c_str(), u);
          }
          return 0;
        };
      });
    };
    pair_limit("inserter", "inserter of a parallel pair");
    pair_limit("comma", "comma object of a cospan");
    pair_limit("pullback", "pullback of a cospan");
  }
  {
    CLI::App* c = app.add_subcommand("split", "split a congruence R on the carrier of OBJ, R containing its congruence");
    auto& obj = positional(ctx, c, "object", "object file");
    auto& rel = positional(ctx, c, "R", ".rel file on the carrier");
    Output o = add_output(ctx, c, false);
    c->callback([&ctx, &obj, &rel, o] {
      ctx.action = [&obj, &rel, o] {
        ExRegObject A = read_object_file(obj).object;
        Splitting s = split_congruence(A, read_rel_file(rel).rel);
        Artifacts out;
        std::string a = out.object("object", A), m = out.object("middle", s.middle);
        out.morphism("quotient", s.quotient, a, m);
        out.rel("section", s.section.rel, "object.poset", "object.poset");
        emit(o, out);
        return 0;
      };
    });
  }
  {
    CLI::App* c = app.add_subcommand("present", "canonical exact presentation of an object");
    auto& obj = positional(ctx, c, "object", "object file");
    bool& verify = ctx.flags.emplace_back(false);
    c->add_flag("--verify", verify, "check the comma and coinserter properties by enumeration");
    std::size_t& bound = add_bound(ctx, c, default_cone_bound, "carrier bound for the test objects");
    Output o = add_output(ctx, c, false);
    c->callback([&ctx, &obj, &verify, &bound, o] {
      ctx.action = [&obj, &verify, &bound, o] {
        ExRegObject A = read_object_file(obj).object;
        Presentation p = canonical_presentation(A);
        Artifacts out;
        std::string a = out.object("object", A);
        std::string gx = out.object("carrier", gamma(A.carrier()));
        std::string pairs = out.object("pairs", p.comma_obj);
        out.morphism("leg0", p.leg0, pairs, gx);
        out.morphism("leg1", p.leg1, pairs, gx);
        out.morphism("cover", p.cover, gx, a);
        emit(o, out);
        if (verify) report_check("presentation", verify_presentation(p, bound));
        return 0;
      };
    });
  }
}

// ---- equiv ----------------------------------------------------------------

void equiv_commands(Context& ctx, CLI::App& app) {
  CLI::App* Q = app.add_subcommand("equiv", "equivalence checks between the completion and FinPos");
  Q->require_subcommand(1);
  auto make = [&](const char* name, const char* desc, std::function<Report(std::size_t, std::size_t, std::uint64_t)> run) {
    CLI::App* c = Q->add_subcommand(name, desc);
    std::size_t& bound = add_bound(ctx, c, 4, "carrier bound");
    std::size_t& samples = ctx.sizes.emplace_back(100);
    c->add_option("--samples", samples, "sampled object pairs")->capture_default_str();
    std::size_t& seed = ctx.sizes.emplace_back(1);
    c->add_option("--seed", seed, "sampling seed")->capture_default_str();
    c->callback([&ctx, &bound, &samples, &seed, run] {
      ctx.action = [&bound, &samples, &seed, run] {
        Report r = run(bound, samples, seed);
        std::cout << r.str();
        return r.ok() ? 0 : 1;
      };
    });
  };
  make("set-pos", "completion of finite sets against finite posets",
       [](std::size_t b, std::size_t s, std::uint64_t seed) {
         return verify_characterization(BaseFunctor::DiscreteInclusion, b, s, seed, b + 1);
       });
  make("identity", "completion of FinPos along the identity", [](std::size_t b, std::size_t s, std::uint64_t seed) {
    return verify_characterization(BaseFunctor::Identity, b, s, seed);
  });
  make("discrete", "discrete objects and their realizations",
       [](std::size_t b, std::size_t, std::uint64_t) { return discrete_check(b); });
  // commutation_check includes the ord_agreement checks
  make("ord", "Ord(FinSet) against FinPos and the commutation of completions",
       [](std::size_t b, std::size_t, std::uint64_t) { return commutation_check(b); });
}

// ---- harness --------------------------------------------------------------

void harness_commands(Context& ctx, CLI::App& app) {
  CLI::App* H = app.add_subcommand("harness", "property suites");
  H->require_subcommand(1);

  // Bound K caps the poset, relation, exreg and limit generators at K.
  auto bounds_option = [&](CLI::App* c) {
    std::size_t& k = ctx.sizes.emplace_back(std::getenv("EXREG_BOUND") ? default_bound(0) : 0);
    c->add_option("--bound", k, "cap every generated carrier at K (0 keeps the defaults)");
    return &k;
  };
  auto to_bounds = [](std::size_t k) {
    SizeBounds b;
    if (k > 0) b.poset = b.relation = b.exreg = b.limit = k;
    return b;
  };
  {
    CLI::App* c = H->add_subcommand("run", "run one suite or all of them");
    auto& which = positional(ctx, c, "suite", "suite name or 'all'");
    std::size_t& trials = ctx.sizes.emplace_back(100);
    std::size_t& seed = ctx.sizes.emplace_back(1);
    std::size_t& jobs = ctx.sizes.emplace_back(1);
    c->add_option("--trials", trials, "trials per suite")->capture_default_str();
    c->add_option("--seed", seed, "base seed")->capture_default_str();
    c->add_option("--jobs", jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    std::size_t* k = bounds_option(c);
    std::string& out = ctx.strings.emplace_back();
    c->add_option("--out", out, "write counterexample files under DIR/<suite>/trial<N>");
    bool& timing = ctx.flags.emplace_back(false);
    c->add_flag("--timing", timing, "print per-suite wall time to stderr");
    c->callback([&ctx, &which, &trials, &seed, &jobs, k, &out, &timing, to_bounds] {
      ctx.action = [&which, &trials, &seed, &jobs, k, &out, &timing, to_bounds] {
        if (which != "all") find_suite(which);
        RunOptions opt;
        opt.trials = trials;
        opt.seed = seed;
        opt.jobs = jobs;
        opt.bounds = to_bounds(*k);
        HarnessResult res = run_harness(which, opt);
        std::cout << res.str();
        if (!out.empty())
          for (const auto& r : res.reports)
            for (const auto& f : r.failures)
              f.counterexample.write_to(fs::path(out) / r.suite / ("trial" + std::to_string(f.trial)));
        if (timing) {
          double total = 0;
          for (const auto& r : res.reports) {
            std::cerr << r.suite << " " << r.seconds << "s\n";
            total += r.seconds;
          }
          std::cerr << "total " << total << "s\n";
        }
        return res.ok() ? 0 : 1;
      };
    });
  }
  {
    CLI::App* c = H->add_subcommand("list", "list suites, anchors and coverage gaps");
    c->callback([&ctx] {
      ctx.action = [] {
        for (const auto& s : registry()) std::cout << s.name << " [" << s.anchor << "] " << s.description << "\n";
        std::cout << "\n";
        for (const auto& a : anchors())
          std::cout << (a.required ? "* " : "  ") << a.id << ": " << a.statement << "\n";
        auto gaps = coverage_gaps();
        std::cout << "\ncoverage gaps " << gaps.size() << "\n";
        for (const auto& g : gaps) std::cout << "  " << g << "\n";
        return gaps.empty() ? 0 : 1;
      };
    });
  }
  {
    CLI::App* c = H->add_subcommand("replay", "rerun a single trial from its subseed");
    auto& which = positional(ctx, c, "suite", "suite name");
    std::string& subseed = ctx.strings.emplace_back();
    c->add_option("--subseed", subseed, "subseed printed in a failure report (decimal or 0x hex)")->required();
    std::size_t* k = bounds_option(c);
    Output o = add_output(ctx, c, false);
    c->callback([&ctx, &which, &subseed, k, o, to_bounds] {
      ctx.action = [&which, &subseed, k, o, to_bounds] {
        const Suite& s = find_suite(which);
        std::uint64_t seed = 0;
        try {
          std::size_t used = 0;
          seed = std::stoull(subseed, &used, 0);
          if (used != subseed.size()) throw std::invalid_argument(subseed);
        } catch (const std::logic_error&) {
          fail(ErrorCode::ParseError, "cannot parse subseed '" + subseed + "'");
        }
        TrialOutcome t = run_trial(s, seed, to_bounds(*k));
        std::cout << (t.ok ? "PASS " : "FAIL ") << s.name;
        if (!t.ok) std::cout << ": " << t.message;
        std::cout << "\n";
        if (!t.ok) {
          if (!o.dir->empty())
            t.counterexample.write_to(*o.dir);
          else
            t.counterexample.print(std::cout);
        }
        return t.ok ? 0 : 1;
      };
    });
  }
}

// ---- dot ------------------------------------------------------------------

void dot_command(Context& ctx, CLI::App& app) {
  CLI::App* c = app.add_subcommand("dot", "DOT drawing of a .poset, .map, .rel or .exreg file");
  auto& file = positional(ctx, c, "file", "input file");
  std::string& out = ctx.strings.emplace_back();
  c->add_option("-o,--output", out, "output file (default stdout)");
  c->callback([&ctx, &file, &out] {
    ctx.action = [&file, &out] {
      std::string ext = fs::path(file).extension().string();
      std::string text;
      if (ext == ".poset") {
        FinPoset P = read_poset_file(file);
        text = to_text([&](std::ostream& os) { write_poset_dot(os, P, file); });
      } else if (ext == ".map") {
        Relation G = graph(read_map(file));
        text = to_text([&](std::ostream& os) { write_relation_dot(os, G, file); });
      } else if (ext == ".rel") {
        Relation R = read_rel_file(file).rel;
        text = to_text([&](std::ostream& os) { write_relation_dot(os, R, file); });
      } else if (ext == ".exreg") {
        ExRegFile f = read_exreg_file(file);
        const Relation& R = std::holds_alternative<ObjectFile>(f) ? std::get<ObjectFile>(f).object.congruence()
                                                                  : std::get<MorphismFile>(f).morphism.lower();
        text = to_text([&](std::ostream& os) { write_relation_dot(os, R, file); });
      } else {
        fail(ErrorCode::ParseError, file + ":0: unknown file type '" + ext + "'");
      }
      if (out.empty()) {
        std::cout << text;
      } else {
        std::ofstream os(out);
        if (!os) fail(ErrorCode::ParseError, out + ":0: cannot write file");
        os << text;
      }
      return 0;
    };
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exreg: finite posets, relations and the exact completion"};
  app.require_subcommand(1);
  Context ctx;
  try {
    poset_commands(ctx, app);
    rel_commands(ctx, app);
    exreg_commands(ctx, app);
    construction_commands(ctx, app);
    equiv_commands(ctx, app);
    harness_commands(ctx, app);
    dot_command(ctx, app);
  } catch (const Error& e) {
    // only EXREG_BOUND can fail this early
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return ctx.action ? ctx.action() : 2;
  } catch (const CheckFailed&) {
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
