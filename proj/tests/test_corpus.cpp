#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <sstream>

#include "sftc/chunking.hpp"
#include "sftc/corpus.hpp"
#include "sftc/pipeline.hpp"
#include "support.hpp"

using namespace sftc;

namespace {

std::string line(const std::string& id, const std::string& extra = "") {
  return R"({"id":")" + id + R"(","split":"train","messages":[{"role":"user","content":"hi"},{"role":"assistant","content":"yo"}])" +
         extra + "}\n";
}

}  // namespace

TEST_CASE("parsing a minimal corpus") {
  const auto res = parse_corpus(line("a"));
  REQUIRE(res.conversations.size() == 1);
  const auto& c = res.conversations[0];
  CHECK(c.id == "a");
  CHECK(c.split == "train");
  REQUIRE(c.messages.size() == 2);
  CHECK(c.messages[1].role == Role::kAssistant);
  CHECK(c.messages[1].index == 1);
}

TEST_CASE("duplicate ids cite both lines") {
  const std::string text = line("a") + line("b") + line("c") + line("d") + line("e") + line("f") + line("c");
  try {
    parse_corpus(text);
    FAIL("expected a corpus error");
  } catch (const CorpusError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("3") != std::string::npos);
    CHECK(msg.find("7") != std::string::npos);
  }
}

TEST_CASE("malformed lines: strict fails, lenient skips with line numbers") {
  const std::string text = line("a") + "{not json\n" + R"({"id":"b","split":"x","messages":[]})" + "\n" +
                           R"({"split":"x","messages":[{"role":"user","content":"q"}]})" + "\n" +
                           R"({"id":"d","split":"x","messages":[{"role":"wizard","content":"q"}]})" + "\n" + line("e");
  CHECK_THROWS_AS(parse_corpus(text), ValidationError);
  const auto res = parse_corpus(text, ParseOptions{false});
  REQUIRE(res.conversations.size() == 2);
  CHECK(res.conversations[1].id == "e");
  REQUIRE(res.diagnostics.size() == 4);
  CHECK(res.diagnostics[0].line == 2);
  CHECK(res.diagnostics[1].line == 3);
  CHECK(res.diagnostics[2].line == 4);
  CHECK(res.diagnostics[3].line == 5);
}

TEST_CASE("large corpus keeps file order") {
  std::string text;
  for (int i = 0; i < 1000; ++i) text += line("id" + std::to_string(i));
  const auto res = parse_corpus(text);
  REQUIRE(res.conversations.size() == 1000);
  for (int i = 0; i < 1000; ++i) CHECK(res.conversations[i].id == "id" + std::to_string(i));
}

TEST_CASE("unknown fields survive a roundtrip in place") {
  const auto text = line("a", R"(,"category":"math","meta":{"k":[1,2]})");
  const auto res = parse_corpus(text);
  std::ostringstream os;
  write_corpus(os, res.conversations);
  CHECK(os.str() == text);
}

TEST_CASE("think span splitting") {
  CHECK(split_parts("hello") == std::vector<Part>{{PartKind::kVisible, "hello"}});
  CHECK(split_parts("<think>A</think>B") == std::vector<Part>{{PartKind::kThink, "A"}, {PartKind::kVisible, "B"}});
  CHECK(split_parts("X<think>Y</think>") == std::vector<Part>{{PartKind::kVisible, "X"}, {PartKind::kThink, "Y"}});
  CHECK(split_parts("") == std::vector<Part>{{PartKind::kVisible, ""}});
  CHECK(split_parts("<think></think>") == std::vector<Part>{{PartKind::kThink, ""}});
  for (const std::string s : {"hello", "<think>A</think>B", "X<think>Y</think>", "a<think>b</think>c<think>d</think>e",
                              "<think></think>", ""}) {
    CHECK(join_parts(split_parts(s)) == s);
  }
  CHECK_THROWS_AS(split_parts("<think>a<think>b</think></think>"), ValidationError);
  CHECK_THROWS_AS(split_parts("<think>open"), ValidationError);
  CHECK_THROWS_AS(split_parts("close</think>"), ValidationError);
}

TEST_CASE("decompose numbering") {
  Conversation c{"c", "s", {{Role::kUser, "q", 0}, {Role::kAssistant, "<think>T</think>R", 1}}, {}};
  const auto units = decompose(c, trivial_plan(c));
  REQUIRE(units.size() == 3);
  CHECK(units[0].chunk_count == 1);
  CHECK(units[1].part_type == PartKind::kThink);
  CHECK(units[1].part_index == 0);
  CHECK(units[2].part_type == PartKind::kVisible);
  CHECK(units[2].part_index == 1);

  Conversation one{"d", "s", {{Role::kUser, "abcdef", 0}}, {}};
  const auto three = decompose(one, ChunkPlan{{{"ab", "cd", "ef"}}});
  REQUIRE(three.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(three[i].chunk_index == i);
    CHECK(three[i].chunk_count == 3);
  }
  CHECK_THROWS_AS(decompose(one, ChunkPlan{{{"ab", "cd"}}}), ConsistencyError);
  CHECK_THROWS_AS(decompose(one, ChunkPlan{}), ConsistencyError);
  CHECK_THROWS_AS(decompose(c, ChunkPlan{{{"q"}}, {{"T"}}}), ConsistencyError);
}

TEST_CASE("reconstruct is order independent and reports gaps") {
  Conversation one{"d", "s", {{Role::kUser, "x", 0}, {Role::kAssistant, "abcdef", 1}}, {}};
  const auto units = decompose(one, ChunkPlan{{{"x"}}, {{"ab", "cd", "ef"}}});
  auto translated = identity_translate(units, "id");
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(translated.begin(), translated.end(), rng);
    const auto back = reconstruct(translated);
    CHECK(back.messages == one.messages);
  }
  auto missing = identity_translate(units, "id");
  missing.erase(missing.begin() + 2);  // message 1, part 0, chunk 1
  try {
    reconstruct(missing);
    FAIL("expected an incomplete-set error");
  } catch (const IncompleteError& e) {
    CHECK(std::string(e.what()).find("(1, 0, 1)") != std::string::npos);
  }
  auto conflicting = identity_translate(units, "id");
  conflicting[3].unit.chunk_count = 4;
  CHECK_THROWS_AS(reconstruct(conflicting), ConsistencyError);
  auto dup = identity_translate(units, "id");
  dup.push_back(dup.back());
  CHECK_THROWS_AS(reconstruct(dup), ConsistencyError);
}

TEST_CASE("decompose then reconstruct is the identity on random corpora") {
  std::mt19937_64 rng(2024);
  Tokenizer tok;
  ChunkPolicy small{60, 10, 70};
  for (int i = 0; i < 300; ++i) {
    const auto c = testing::random_conversation(rng, "c" + std::to_string(i));
    for (const auto& policy : {ChunkPolicy{}, small}) {
      const auto units = decompose(c, plan_conversation(c, tok, policy));
      auto translated = identity_translate(units, "identity");
      std::shuffle(translated.begin(), translated.end(), rng);
      auto back = reconstruct(translated);
      back.extra = c.extra;
      CHECK(to_jsonl_line(back) == to_jsonl_line(c));
    }
  }
}

TEST_CASE("structure validation") {
  Conversation src{"c", "s", {{Role::kUser, "q", 0}, {Role::kAssistant, "<think>T</think>R", 1}}, {}};
  auto same = src;
  same.messages[1].content = "<think>ت</think>ر";
  CHECK_NOTHROW(validate_structure(src, same));
  auto lost_think = src;
  lost_think.messages[1].content = "R";
  CHECK_THROWS_AS(validate_structure(src, lost_think), ValidationError);
  auto role = src;
  role.messages[0].role = Role::kSystem;
  CHECK_THROWS_AS(validate_structure(src, role), ValidationError);
}

TEST_CASE("unit files roundtrip") {
  std::mt19937_64 rng(9);
  const auto c = testing::random_conversation(rng, "u");
  const auto units = decompose(c, trivial_plan(c));
  std::istringstream in(jsonl(units));
  CHECK(read_units(in) == units);
  const auto tr = identity_translate(units, "t");
  std::istringstream in2(jsonl(tr));
  CHECK(read_translated_units(in2) == tr);
  std::istringstream bad("{\"conversation_id\":\"x\"}\n");
  CHECK_THROWS_AS(read_units(bad), ValidationError);
}

TEST_CASE("system passthrough keeps system text untouched") {
  Conversation c{"c", "s", {{Role::kSystem, "Be brief.", 0}, {Role::kUser, "hi", 1}}, {}};
  const auto units = decompose(c, trivial_plan(c));
  const auto todo = translatable_units(units, true);
  REQUIRE(todo.size() == 1);
  std::vector<TranslatedUnit> done;
  for (const auto& u : todo) done.push_back({u, "مرحبا", "t"});
  const auto pass = passthrough_units(units);
  done.insert(done.end(), pass.begin(), pass.end());
  const auto out = assemble({c}, done);
  CHECK(out[0].messages[0].content == "Be brief.");
  CHECK(out[0].messages[1].content == "مرحبا");
}

TEST_CASE("a thousand-conversation file survives the full roundtrip byte for byte") {
  std::mt19937_64 rng(1000);
  std::vector<Conversation> convs;
  for (int i = 0; i < 1000; ++i) convs.push_back(testing::random_conversation(rng, "conv-" + std::to_string(i)));
  const auto text = corpus_text(convs);
  const auto parsed = parse_corpus(text).conversations;
  REQUIRE(parsed.size() == 1000);
  const auto units = decompose_corpus(parsed, Tokenizer{}, ChunkPolicy{});
  std::size_t multi = 0, think = 0;
  for (const auto& u : units) {
    multi += u.chunk_count > 1;
    think += u.part_type == PartKind::kThink;
  }
  CHECK(multi > 0);
  CHECK(think > 0);
  auto translated = identity_translate(units, "identity");
  std::shuffle(translated.begin(), translated.end(), rng);
  CHECK(corpus_text(assemble(parsed, translated)) == text);
}
