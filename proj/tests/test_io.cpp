#include "oracles.hpp"

#include <exreg/generators.hpp>
#include <exreg/io.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace exreg;

namespace {

const fs::path data = EXREG_TEST_DATA;

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("exreg_io_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void write_file(const fs::path& p, const std::string& s) { std::ofstream(p) << s; }

// Runs f and returns the error it raises.
template <class F>
Error error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error raised";
  return Error(ErrorCode::ParseError, "none");
}

}  // namespace

TEST(PosetFiles, Fixtures) {
  FinPoset d2 = read_poset_file(data / "d2.poset");
  EXPECT_TRUE(d2 == discrete(2));
  EXPECT_EQ(d2.label(0), "a");
  EXPECT_EQ(d2.label(1), "b");
  EXPECT_TRUE(read_poset_file(data / "c3.poset") == chain(3));
}

TEST(PosetFiles, Errors) {
  Error e = error_of([] { read_poset_file(data / "bad.poset"); });
  EXPECT_EQ(e.code(), ErrorCode::AntisymmetryViolation);
  EXPECT_NE(std::string(e.what()).find("bad.poset:4"), std::string::npos) << e.what();

  Error b = error_of([] { read_poset_file(data / "badindex.poset"); });
  EXPECT_EQ(b.code(), ErrorCode::ParseError);
  EXPECT_NE(std::string(b.what()).find("badindex.poset:2"), std::string::npos) << b.what();

  EXPECT_EQ(error_of([] { read_poset_file(data / "missing.poset"); }).code(), ErrorCode::ParseError);
  std::istringstream junk("poset 3\n0 <= 1\n");
  Error j = error_of([&] { parse_poset(junk, "junk"); });
  EXPECT_NE(std::string(j.what()).find("junk:2"), std::string::npos);
  std::istringstream header("set 3\n");
  EXPECT_EQ(error_of([&] { parse_poset(header, "h"); }).code(), ErrorCode::ParseError);
}

TEST(PosetFiles, CommentsAndBlankLines) {
  std::istringstream in("# header\n\nposet 3 # three\n0 < 1\n\n# nothing\n");
  FinPoset P = parse_poset(in, "c");
  EXPECT_EQ(P.size(), 3U);
  EXPECT_TRUE(P.leq(0, 1));
  EXPECT_FALSE(P.leq(1, 2));
}

TEST(PosetFiles, RoundTrip) {
  Generator g(70);
  for (int t = 0; t < 200; ++t) {
    FinPoset P = g.poset_upto(7);
    std::istringstream in(poset_text(P));
    EXPECT_TRUE(parse_poset(in, "rt") == P);
  }
}

TEST(PosetFiles, WritesCoverPairs) {
  // a written poset lists only the covering pairs: the transitive reduction
  Generator g(71);
  for (int t = 0; t < 100; ++t) {
    FinPoset P = g.poset_upto(6);
    oracle::Mat le = oracle::order(P);
    oracle::Pairs want;
    for (std::size_t i = 0; i < P.size(); ++i)
      for (std::size_t j = 0; j < P.size(); ++j) {
        if (i == j || !le[i][j]) continue;
        bool between = false;
        for (std::size_t k = 0; k < P.size() && !between; ++k)
          between = k != i && k != j && le[i][k] && le[k][j];
        if (!between) want.emplace(i, j);
      }
    auto got = cover_pairs(P);
    EXPECT_EQ(oracle::Pairs(got.begin(), got.end()), want);
  }
}

TEST(MapFiles, Fixtures) {
  MapFile f = read_map_file(data / "f.map");
  EXPECT_EQ(f.map.assign(), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(f.map.dom() == discrete(2));
  EXPECT_EQ(f.dom_path, data / "d2.poset");
  Error e = error_of([] { read_map_file(data / "antitone.map"); });
  EXPECT_EQ(e.code(), ErrorCode::NotMonotone);
  EXPECT_NE(std::string(e.what()).find("antitone.map"), std::string::npos);
}

TEST(MapFiles, Errors) {
  TempDir tmp;
  fs::copy(data / "c2.poset", tmp.path / "c2.poset");
  write_file(tmp.path / "twice.map", "map c2.poset c2.poset\n0 -> 0\n0 -> 1\n1 -> 1\n");
  write_file(tmp.path / "partial.map", "map c2.poset c2.poset\n0 -> 0\n");
  write_file(tmp.path / "range.map", "map c2.poset c2.poset\n0 -> 0\n1 -> 2\n");
  for (const char* n : {"twice.map", "partial.map", "range.map"})
    EXPECT_EQ(error_of([&] { read_map_file(tmp.path / n); }).code(), ErrorCode::ParseError) << n;
}

TEST(RelFiles, Fixtures) {
  RelFile r = read_rel_file(data / "phi.rel");
  EXPECT_EQ(oracle::pairs(r.rel), (oracle::Pairs{{0, 0}, {0, 1}, {1, 1}}));
  EXPECT_TRUE(r.rel.cod() == chain(2));
  EXPECT_EQ(oracle::pairs(read_rel_file(data / "r.rel").rel), (oracle::Pairs{{0, 1}}));
}

TEST(ExRegFiles, Objects) {
  ObjectFile d2 = read_object_file(data / "d2.exreg");
  EXPECT_TRUE(d2.object == gamma(discrete(2)));
  ObjectFile le = read_object_file(data / "d2_le.exreg");
  EXPECT_EQ(oracle::pairs(le.object.congruence()), (oracle::Pairs{{0, 0}, {0, 1}, {1, 1}}));
  ObjectFile full = read_object_file(data / "d2_full.exreg");
  EXPECT_EQ(full.object.congruence().pairs().size(), 4U);
  EXPECT_EQ(error_of([] { read_object_file(data / "m.exreg"); }).code(), ErrorCode::ParseError);
}

TEST(ExRegFiles, Morphisms) {
  MorphismFile m = read_morphism_file(data / "m.exreg");
  EXPECT_TRUE(m.morphism == gamma(MonotoneMap(discrete(2), chain(2), {0, 1})));
  MorphismFile id = read_morphism_file(data / "id_c2.exreg");
  EXPECT_TRUE(id.morphism == identity(gamma(chain(2))));
  Error e = error_of([] { read_morphism_file(data / "badlaw.exreg"); });
  EXPECT_EQ(e.code(), ErrorCode::BimoduleLawFailed);
  EXPECT_NE(std::string(e.what()).find("badlaw.exreg"), std::string::npos);
}

TEST(ExRegFiles, RoundTripThroughBundles) {
  Generator g(72);
  TempDir tmp;
  for (int t = 0; t < 60; ++t) {
    ExRegMorphism R = g.exreg_morphism(4);
    Artifacts art;
    art.morphism("m", R);
    fs::path dir = tmp.path / std::to_string(t);
    art.bundle().write_to(dir);
    EXPECT_TRUE(read_morphism_file(dir / "m.exreg").morphism == R);
    EXPECT_TRUE(read_object_file(dir / "m.src.exreg").object == R.src());

    MonotoneMap f = g.map_upto(5);
    Artifacts am;
    am.map("f", f);
    am.bundle().write_to(dir);
    EXPECT_TRUE(read_map_file(dir / "f.map").map == f);

    Relation rel = g.relation(f.dom(), f.cod());
    Artifacts ar;
    std::string dom = ar.poset("x", f.dom());
    std::string cod = ar.poset("y", f.cod());
    ar.rel("r", rel, dom, cod);
    ar.bundle().write_to(dir);
    EXPECT_TRUE(read_rel_file(dir / "r.rel").rel == rel);
  }
}

TEST(Bundles, PrintOrderAndSections) {
  Artifacts art;
  art.morphism("m", identity(gamma(chain(2))));
  std::string s = art.str();
  auto a = s.find("## m.src.poset"), b = s.find("## m.src.exreg"), c = s.find("## m.tgt.poset"),
       d = s.find("## m.exreg");
  ASSERT_NE(d, std::string::npos);
  EXPECT_LT(a, b);
  EXPECT_LT(b, c);
  EXPECT_LT(c, d);
}

TEST(Dot, Output) {
  std::ostringstream os;
  write_poset_dot(os, chain(3), "c3");
  std::string s = os.str();
  EXPECT_NE(s.find("digraph"), std::string::npos);
  EXPECT_NE(s.find("n0 -> n1"), std::string::npos);
  EXPECT_EQ(s.find("n0 -> n2"), std::string::npos);
  std::ostringstream rs;
  write_relation_dot(rs, read_rel_file(data / "phi.rel").rel);
  EXPECT_NE(rs.str().find("digraph"), std::string::npos);
}
