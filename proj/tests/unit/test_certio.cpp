#include "antichain/certio.hpp"
#include "antichain/construct.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>

namespace {

using namespace antichain;
using namespace antichain::certio;

Certificate constructed(int n, int r) {
  return make_certificate(construct::build_construction(n, r), r, Provenance::ConstructedStrict);
}

int parse_error_line(const std::string& text) {
  try {
    parse_certificates(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

const char* kSmall =
    "# two singletons\n"
    "instance n=3 r=2\n"
    "provenance search\n"
    "tool antichain-test\n"
    "levels 1\n"
    "set 1\n"
    "set 2\n"
    "end\n";

TEST(Write, SingletonBodyLines) {
  Certificate c = make_certificate(Family::of(3, {{1}, {2}}), 2, Provenance::External);
  c.tool.clear();
  EXPECT_EQ(format_certificate(c),
            "instance n=3 r=2\n"
            "provenance external\n"
            "levels 1\n"
            "set 1\n"
            "set 2\n"
            "end\n");
}

TEST(Write, RefusesMismatchedHeader) {
  Certificate c = make_certificate(Family::of(3, {{1}, {2}}), 2, Provenance::External);
  c.levels = {1, 2};
  std::ostringstream os;
  EXPECT_THROW(write_certificate(c, os), HeaderMismatch);
  EXPECT_TRUE(os.str().empty());
  c.levels = {1};
  c.n = 4;
  EXPECT_THROW(format_certificate(c), HeaderMismatch);
}

TEST(Write, ReturnsBytesWritten) {
  const auto c = read_certificate(kSmall);
  std::ostringstream os;
  const auto bytes = write_certificate(c, os);
  EXPECT_EQ(bytes, os.str().size());
  EXPECT_EQ(os.str(), kSmall);
}

TEST(RoundTrip, ConstructedTwentyOneTwo) {
  const auto c = constructed(21, 2);
  const std::string text = format_certificate(c);
  const auto back = read_certificate(text);
  EXPECT_EQ(back, c);
  EXPECT_EQ(format_certificate(back), text);
}

TEST(RoundTrip, MultipleBlocksAndFiles) {
  const auto a = constructed(21, 2);
  const auto b = constructed(25, 3);
  const auto dir = std::filesystem::temp_directory_path() / "antichain_certio_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "two.txt").string();
  const auto bytes = write_certificates({a, b}, path);
  EXPECT_EQ(bytes, std::filesystem::file_size(path));
  const auto back = read_certificates(path);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0], a);
  EXPECT_EQ(back[1], b);
  std::filesystem::remove_all(dir);
}

TEST(Read, WellFormed) {
  const auto c = read_certificate(kSmall);
  EXPECT_EQ(c.n, 3);
  EXPECT_EQ(c.r, 2);
  EXPECT_EQ(c.provenance, Provenance::Search);
  EXPECT_EQ(c.tool, "antichain-test");
  EXPECT_EQ(c.comments, std::vector<std::string>{"two singletons"});
  EXPECT_EQ(c.family, Family::of(3, {{1}, {2}}));
}

TEST(Read, OptionalLinesDefault) {
  const auto c = read_certificate("instance n=4 r=1\nlevels 2\nset 1 4\nend\n");
  EXPECT_EQ(c.provenance, Provenance::External);
  EXPECT_TRUE(c.tool.empty());
}

TEST(Read, EmptyFamily) {
  const auto c = read_certificate("instance n=4 r=2\nlevels\nend\n");
  EXPECT_TRUE(c.family.empty());
  const auto d = read_certificate("instance n=4 r=1\nlevels 0\nset\nend\n");
  EXPECT_EQ(d.family.size(), 1u);
}

TEST(Read, StrictRejections) {
  const std::string head = "instance n=4 r=2\nlevels 2\n";
  EXPECT_EQ(parse_error_line(head + "set 0 2\nend\n"), 3);
  EXPECT_EQ(parse_error_line(head + "set 1 1\nend\n"), 3);
  EXPECT_EQ(parse_error_line(head + "set 2 1\nend\n"), 3);
  EXPECT_EQ(parse_error_line(head + "set 1 5\nend\n"), 3);
  EXPECT_EQ(parse_error_line(head + "set 1 2\nset 1 2\nend\n"), 4);
  EXPECT_EQ(parse_error_line(head + "set 1  2\nend\n"), 3);
  EXPECT_EQ(parse_error_line(head + "set 1 02\nend\n"), 3);
  EXPECT_EQ(parse_error_line(head + "set 1 2 \nend\n"), 3);
  EXPECT_EQ(parse_error_line(head + "set 1 2\r\nend\n"), 3);
  EXPECT_EQ(parse_error_line(head + "set 1 x\nend\n"), 3);
  EXPECT_EQ(parse_error_line(head + "frobnicate\nend\n"), 3);
  EXPECT_EQ(parse_error_line(head + "set 1 2\n"), 3);  // missing end
  EXPECT_EQ(parse_error_line("levels 2\n"), 1);
  EXPECT_EQ(parse_error_line("instance n=0 r=2\n"), 1);
  EXPECT_EQ(parse_error_line("instance n=65 r=2\n"), 1);
  EXPECT_EQ(parse_error_line("instance r=2 n=4\n"), 1);
  EXPECT_EQ(parse_error_line("instance n=4 r=2\nset 1\n"), 2);
  EXPECT_EQ(parse_error_line("instance n=4 r=2\nprovenance guessed\n"), 2);
  EXPECT_EQ(parse_error_line("instance n=4 r=2\nlevels 3 2\n"), 2);
  EXPECT_EQ(parse_error_line("instance n=4 r=2\nlevels 5\n"), 2);
  EXPECT_EQ(parse_error_line("instance n=4 r=2\nlevels 2\nlevels 2\n"), 3);
  EXPECT_EQ(parse_error_line(std::string(kSmall) + "# trailing\n"), 9);
}

TEST(Read, BodyContradictingHeader) {
  EXPECT_THROW(parse_certificates("instance n=4 r=2\nlevels 2 3\nset 1 2\nset 1 3\nend\n"), HeaderMismatch);
  EXPECT_THROW(parse_certificates("instance n=4 r=2\nlevels 2\nset 1\nend\n"), HeaderMismatch);
}

TEST(Read, ExactlyOneBlockForSingleRead) {
  EXPECT_THROW(read_certificate(std::string(kSmall) + kSmall), ParseError);
  EXPECT_EQ(parse_certificates(std::string(kSmall) + "\n" + kSmall).size(), 2u);
  EXPECT_TRUE(parse_certificates("").empty());
}

TEST(Verify, ConstructedTwentyOneTwo) {
  const auto rep = verify_certificate(constructed(21, 2));
  EXPECT_TRUE(rep.antichain);
  EXPECT_TRUE(rep.multiplicity_ok);
  EXPECT_TRUE(rep.matches_claim);
  EXPECT_TRUE(rep.g_bound_consistent);
  EXPECT_EQ(rep.num_levels, 18);
  for (const auto& [t, count] : rep.levels) EXPECT_EQ(count, 2) << t;
}

TEST(Verify, DeletedSetBreaksMultiplicity) {
  const auto full = construct::build_construction(21, 2);
  std::vector<SubsetCode> kept(full.members().begin(), full.members().end());
  kept.erase(kept.begin());  // one of the two 2-sets
  const Family f(GroundSize(21), kept);
  const auto rep = verify_certificate(make_certificate(f, 2, Provenance::External));
  EXPECT_TRUE(rep.antichain);
  EXPECT_FALSE(rep.multiplicity_ok);
  EXPECT_FALSE(rep.matches_claim);
}

TEST(Verify, TooManyLevelsContradictTheBound) {
  // two sizes on [4] with r = 2 exceeds n - 3 = 1
  const auto f = Family::of(4, {{1}, {2}, {1, 3}, {1, 4}});
  const auto rep = verify_certificate(make_certificate(f, 2, Provenance::External));
  EXPECT_FALSE(rep.g_bound_consistent);
  EXPECT_FALSE(rep.antichain);
  EXPECT_FALSE(rep.matches_claim);
}

TEST(Verify, IgnoresProvenance) {
  auto c = constructed(25, 3);
  const auto a = verify_certificate(c);
  c.provenance = Provenance::External;
  const auto b = verify_certificate(c);
  EXPECT_EQ(a.matches_claim, b.matches_claim);
  EXPECT_EQ(a.levels, b.levels);
}

TEST(Io, Failures) {
  EXPECT_THROW(read_certificates("/nonexistent/dir/file.txt"), IoFailure);
  EXPECT_THROW(write_certificate(constructed(21, 2), std::string("/nonexistent/dir/file.txt")), IoFailure);
}

}  // namespace
