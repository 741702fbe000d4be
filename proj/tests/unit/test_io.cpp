#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "uncstates/io.hpp"
#include "uncstates/uncstates.hpp"

using namespace uncstates;
using io::json;

TEST(Json, StateRoundTrip) {
  const FockVector s = displaced_squeezed({0.3, 0.1}, SqueezeFrame::from_r(0.2, 0.5), 24);
  const State back = io::state_from_json(json::parse(io::emit(io::to_json(s))));
  const FockVector& b = std::get<FockVector>(back);
  ASSERT_EQ(b.dim(), s.dim());
  for (int n = 0; n < s.dim(); ++n) EXPECT_EQ(b[n], s[n]);
  EXPECT_EQ(b.label().kind, Algebra::Heisenberg);
}

TEST(Json, DensityRoundTrip) {
  CMatrix m = CMatrix::Zero(3, 3);
  m(0, 0) = 0.25;
  m(1, 1) = 0.75;
  const DensityMatrix rho(RepSpec::su2(1.0), m);
  const DensityMatrix back = std::get<DensityMatrix>(io::state_from_json(io::to_json(rho)));
  EXPECT_EQ(back.entries(), rho.entries());
  EXPECT_DOUBLE_EQ(back.label().j, 1.0);
}

TEST(Json, RepRoundTrip) {
  for (const RepSpec& r : {RepSpec::su11(0.75, 40), RepSpec::suq2(1.5, 0.8), RepSpec::one_mode(Parity::Odd, 30)}) {
    const RepSpec b = io::rep_from_json(io::to_json(r));
    EXPECT_EQ(b.label(), r.label());
  }
  EXPECT_THROW(io::rep_from_json(json{{"kind", "Nope"}}), Error);
}

TEST(Json, EmitIsDeterministic) {
  const json j = io::to_json(canonical_cs(0.4, 16));
  EXPECT_EQ(io::emit(j), io::emit(j));
}

TEST(Config, DefaultsAndOverrides) {
  const io::RunConfig d;
  EXPECT_EQ(d.single_mode_dim, 64);
  EXPECT_EQ(d.per_mode_dim, 20);
  const auto c = io::RunConfig::from_json(json::parse(R"({"tolerances": {"equality": 1e-9}, "seed": 5})"));
  EXPECT_DOUBLE_EQ(c.equality_tol, 1e-9);
  EXPECT_EQ(c.seed, 5u);
  EXPECT_THROW(io::RunConfig::from_json(json::parse(R"({"tolerances": {"psd": -1}})")), Error);
}

TEST(Config, EnvironmentVariableFallback) {
  const auto path = std::filesystem::temp_directory_path() / "uncstates_cfg_test.json";
  std::ofstream(path) << R"({"truncation": {"single_mode": 40}})";
  setenv("UNCSTATES_CONFIG", path.c_str(), 1);
  EXPECT_EQ(io::load_config("").single_mode_dim, 40);
  unsetenv("UNCSTATES_CONFIG");
  EXPECT_EQ(io::load_config("").single_mode_dim, 64);
  std::filesystem::remove(path);
}

TEST(Json, MalformedArgumentIsUsageError) {
  try {
    io::parse_json_arg("{not json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UsageError);
  }
}
