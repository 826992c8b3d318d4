#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "wh2dl/qct/characterizer.hpp"
#include "wh2dl/text/tagger.hpp"
#include "wh2dl/translate/io.hpp"
#include "wh2dl/translate/translator.hpp"

using namespace wh2dl;
using namespace wh2dl::translate;

namespace {

qct::QCT chr(const std::string& q) { return qct::characterize(text::tag_tokens(q)); }

TranslationResult tr(const std::string& q, NominalMode m = NominalMode::PaperLiteral) {
  Context ctx;
  ctx.nominal = m;
  return translate::translate(chr(q), ctx);
}

std::multiset<std::string> normalized(const std::vector<dl::Axiom>& axioms) {
  std::multiset<std::string> out;
  for (const auto& a : axioms) out.insert(dl::serialize(dl::normalize(a)));
  return out;
}

std::string desire(const TranslationResult& r) { return dl::serialize(r.form.desire); }

bool has_rule(const TranslationResult& r, const std::string& rule) {
  return std::find(r.rules.begin(), r.rules.end(), rule) != r.rules.end();
}

}  // namespace

TEST_CASE("hand-derived oracles") {
  auto oracles = testing::read_jsonl("tests/data/translator_oracles.jsonl");
  REQUIRE(oracles.size() >= 15);
  std::set<std::string> rules;
  for (const auto& o : oracles) {
    INFO(o["id"].get<std::string>() << " " << o["query"].get<std::string>());
    rules.insert(o["rule"].get<std::string>());
    auto r = tr(o["query"], *parse_nominal_mode(o["nominalMode"].get<std::string>()));
    CHECK(std::string(to_string(r.form.mode)) == o["mode"].get<std::string>());
    CHECK(dl::structurally_equal(r.form.desire, dl::parse_concept(o["desire"].get<std::string>())));
    std::vector<dl::Axiom> want;
    for (const auto& a : o["axioms"]) want.push_back(dl::parse_axiom(a.get<std::string>()));
    CHECK(normalized(r.axioms()) == normalized(want));
  }
  for (const char* rule : {"1.1", "1.2", "2.1", "2.2", "3.1", "3.2", "modifier-chain", "ext-1", "ext-2",
                           "ext-3.1", "ext-3.2", "compound-split", "reification", "desire-inclusion",
                           "quantitative-how", "temporal-adverbial", "superlative"})
    CHECK_MESSAGE(rules.count(rule) == 1, rule);
}

TEST_CASE("base rule 1.1 emits the strong and weak pair") {
  auto r = tr("What is a cat?");
  REQUIRE(r.query_axioms.size() == 2);
  CHECK(r.query_axioms[0].lhs == r.query_axioms[1].rhs);
  CHECK(r.query_axioms[0].rhs == r.query_axioms[1].lhs);
  CHECK(r.rules.front() == "1.1");
}

TEST_CASE("modifier rule") {
  auto one = apply_modifier_rule({"tall"}, "student");
  REQUIRE(one.size() == 1);
  CHECK(dl::serialize(one[0]) == "Tall_Student SubClassOf Student");
  auto three = apply_modifier_rule({"big", "old", "red"}, "house");
  REQUIRE(three.size() == 3);
  CHECK(dl::serialize(three[2]) == "Big_Old_Red_House SubClassOf Old_Red_House");
  CHECK(apply_modifier_rule({}, "house").empty());
  auto dangerous = tr("What are some dangerous plants?");
  CHECK(desire(dangerous) == "Dangerous_Plant");
  CHECK(normalized(dangerous.support) == std::multiset<std::string>{"Dangerous_Plant SubClassOf Plant"});
}

TEST_CASE("names") {
  CHECK(concept_name({"3.2", "megapixel_resolution"}) == "3_2_Megapixel_Resolution");
  CHECK(concept_name({"SLR_camera"}) == "SLR_Camera");
  CHECK(concept_name({"count"}) == "Count_Class");
  CHECK(role_name({"sometimes", "observed", "in"}) == "observed_in");
  CHECK(role_name({"does", "have"}) == "does_have");
}

TEST_CASE("gerunds") {
  CHECK(gerund("bark") == "barking");
  CHECK(gerund("make") == "making");
  CHECK(gerund("run") == "running");
  CHECK(gerund("die") == "dying");
  CHECK(gerund("see") == "seeing");
  CHECK(gerund("visit") == "visiting");
  CHECK(gerund("sing") == "singing");
}

TEST_CASE("reification guard") {
  auto barks = chr("Who barks?").subqueries[0];
  auto r = reify_empty_input(barks);
  REQUIRE(r.clauses[0].inputs.size() == 1);
  CHECK(r.clauses[0].joined_relation() == "does");
  CHECK(r.clauses[0].inputs[0].joined_head() == "barking");
  auto with_input = chr("Who discovered penicillin?").subqueries[0];
  CHECK(reify_empty_input(with_input) == with_input);
}

TEST_CASE("desire inclusion") {
  auto r = tr("What animals are mammals?");
  CHECK(r.form.mode == QueryMode::TBoxStrong);
  CHECK(desire(r) == "(Animal and Mammal)");
  auto mods = tr("What kind of a large water vehicle is also an air vehicle?");
  CHECK(desire(mods) == "(Large_Water_Vehicle and Air_Vehicle)");
  CHECK(normalized(mods.support) ==
        std::multiset<std::string>{"Large_Water_Vehicle SubClassOf Water_Vehicle"});
}

TEST_CASE("quantitative how shape") {
  for (const char* q : {"How many people live in New York?", "How many moons does Jupiter have?",
                        "How much water does an elephant drink?"}) {
    auto c = tr(q).form.desire;
    REQUIRE(c.kind() == dl::Concept::Kind::Intersection);
    REQUIRE(c.operands().size() == 2);
    CHECK(c.operands()[0].kind() == dl::Concept::Kind::Count);
    CHECK(c.operands()[1].kind() == dl::Concept::Kind::Exists);
    CHECK(c.operands()[1].role() == dl::Role::inv("hasCount"));
  }
}

TEST_CASE("temporal adverbials") {
  auto r = tr("What is often observed in the evening sky?");
  CHECK(desire(r) == "(some sometimes:observed_in . Evening_Sky)");
  CHECK(r.support.size() == 3);
  CHECK(r.support[0].kind == dl::Axiom::Kind::DisjointWith);
  CHECK_THROWS_AS(tr("What is never seen?"), UnsupportedAdverbial);
}

TEST_CASE("superlatives") {
  auto most = tr("Which is the most populous city in India?");
  CHECK(desire(most) ==
        "max((Integer and (some inv(hasValue) . (Population and (some inv(hasPopulation) . (City and (some in . Country)))))))");
  auto least = tr("Which is the least populous city in India?", NominalMode::NominalStrict);
  CHECK(least.form.desire.direction() == dl::Optimum::Min);
  auto on_input = tr("Who is the tallest student?");
  CHECK(desire(on_input) ==
        "max((Integer and (some inv(hasValue) . (Height and (some inv(hasHeight) . Student)))))");
  auto deepest = tr("Which ocean is the deepest?");
  CHECK(desire(deepest) == "max((Integer and (some inv(hasValue) . (Depth and (some inv(hasDepth) . Ocean)))))");
  auto fallback = tr("Who is the greatest crime novel writer?");
  CHECK(has_rule(fallback, "superlative-fallback"));
  Context ctx;
  auto sub = chr("Who is the greatest crime novel writer?").subqueries[0];
  CHECK_THROWS_AS(apply_superlative(sub, ctx), UnknownMeasurableModifier);
}

TEST_CASE("computational how") {
  auto r = tr("How tall is Mount Everest?", NominalMode::NominalStrict);
  CHECK(desire(r) == "(Integer and (some inv(hasValue) . (Height and (some inv(hasHeight) . {Mount_Everest}))))");
  CHECK_THROWS_AS(tr("How beautiful is the sky?"), TranslationFailure);
}

TEST_CASE("quantified and ambiguous who") {
  auto quantified = tr("Who is the student?");
  CHECK(quantified.form.mode == QueryMode::ABoxRetrieval);
  CHECK(quantified.rules.front() == "1.1-quantified");
  auto ambiguous = tr("Who is a student?");
  CHECK(ambiguous.form.mode == QueryMode::ABoxRetrieval);
  CHECK(has_rule(ambiguous, "ambiguous"));
}

TEST_CASE("inverse role follows the subject binding") {
  for (const char* q : {"Which animals do cats eat?", "Which country is California located in?",
                        "What does John drink?", "What is the capital of USA?", "Who discovered penicillin?"}) {
    auto sub = chr(q).subqueries[0];
    auto r = tr(q);
    const auto& parts = r.form.desire.kind() == dl::Concept::Kind::Intersection
                            ? r.form.desire.operands()
                            : std::vector<dl::Concept>{r.form.desire};
    for (const auto& p : parts)
      if (p.kind() == dl::Concept::Kind::Exists)
        CHECK(p.role().inverse == (sub.subject == qct::SubjectBinding::InputIsSubject));
  }
}

TEST_CASE("compound split") {
  auto q = chr("What is the height and weight of an elephant?");
  auto split = split_compound(q);
  CHECK(split.split);
  CHECK(split.combinator == Combinator::Union);
  REQUIRE(split.parts.size() == 2);
  CHECK(split.parts[1].desires[0].joined_head() == "weight");
  CHECK(split.parts[1].clauses == split.parts[0].clauses);

  auto simple = chr("What is a cat?");
  auto same = split_compound(simple);
  CHECK_FALSE(same.split);
  CHECK(same.parts.size() == 1);

  auto r = translate::translate(q);
  CHECK(r.sub.size() == 2);
  CHECK(r.combinator == std::optional<Combinator>(Combinator::Union));
  CHECK(translate::translate(simple).sub.empty());
}

TEST_CASE("json rendering") {
  auto j = to_json(tr("What are some big old red houses?"));
  CHECK(j["mode"] == "TBoxStrong");
  CHECK(j["desire"] == "Big_Old_Red_House");
  CHECK(j["axioms"].size() == 2);
  CHECK(j["support"].size() == 3);
  CHECK(j["combinator"].is_null());
  CHECK(render_text(tr("Who barks?")) == "(some does . Barking)\n");
}

TEST_CASE("determinism") {
  for (const auto& e : testing::read_jsonl("corpus/extended.jsonl")) {
    std::string q = e["query"];
    if (q.find('\t') != std::string::npos) continue;
    CHECK(render_json(tr(q)) == render_json(tr(q)));
  }
}
