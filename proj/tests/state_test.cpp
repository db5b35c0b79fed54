#include <gtest/gtest.h>

#include "gjp/error.hpp"
#include "gjp/signature.hpp"
#include "gjp/state.hpp"

using namespace gjp;

namespace {

Signature small_signature() {
  Signature sig;
  sig.add_agent("a", ValueDomain::booleans());
  sig.add_variable("n", ValueDomain::integer_range(0, 3));
  const auto red = sig.intern("red");
  const auto blue = sig.intern("blue");
  sig.add_variable("colour", ValueDomain(ValueKind::Symbol, {Value::symbol(red), Value::symbol(blue)}));
  return sig;
}

}  // namespace

TEST(Signature, AgentsAreVariables) {
  const auto sig = small_signature();
  EXPECT_EQ(sig.variable_count(), 3u);
  EXPECT_EQ(sig.agent_count(), 1u);
  const auto a = sig.agent_or_throw("a");
  EXPECT_EQ(sig.agent_variable(a), sig.variable_or_throw("a"));
  EXPECT_EQ(sig.agent_of(sig.variable_or_throw("a")), a);
  EXPECT_FALSE(sig.agent_of(sig.variable_or_throw("n")).has_value());
  EXPECT_FALSE(sig.find_agent("n").has_value());
}

TEST(Signature, RejectsDuplicatesAndUnknownNames) {
  auto sig = small_signature();
  EXPECT_THROW(sig.add_variable("n", ValueDomain::booleans()), ValidationError);
  EXPECT_THROW((void)sig.variable_or_throw("missing"), ValidationError);
  EXPECT_THROW((void)sig.agent_or_throw("n"), ValidationError);
}

TEST(Signature, ParsesAndFormatsValuesByType) {
  const auto sig = small_signature();
  const auto n = sig.variable_or_throw("n");
  const auto colour = sig.variable_or_throw("colour");
  EXPECT_EQ(sig.parse_value(n, "2"), Value::integer(2));
  EXPECT_FALSE(sig.parse_value(n, "2x").has_value());
  EXPECT_EQ(sig.parse_value(sig.variable_or_throw("a"), "t"), Value::boolean(true));
  EXPECT_FALSE(sig.parse_value(colour, "green").has_value());
  EXPECT_EQ(sig.format(*sig.parse_value(colour, "blue")), "blue");
  EXPECT_EQ(sig.format(Value::boolean(false)), "false");
}

TEST(ValueDomain, RangesAndValidation) {
  EXPECT_EQ(ValueDomain::integer_range(-2, 2).size(), 5u);
  EXPECT_THROW(ValueDomain::integer_range(3, 2), ValidationError);
  EXPECT_THROW(ValueDomain(ValueKind::Integer, {}), ValidationError);
  EXPECT_THROW(ValueDomain(ValueKind::Integer, {Value::boolean(true)}), ValidationError);
  const auto d = ValueDomain::integers({3, 1, 3});
  EXPECT_EQ(d.size(), 2u);
  EXPECT_TRUE(d.contains(Value::integer(1)));
  EXPECT_FALSE(d.contains(Value::integer(2)));
}

TEST(Value, KindsDoNotCompareEqual) {
  EXPECT_NE(Value::integer(1), Value::boolean(true));
  EXPECT_NE(std::hash<Value>{}(Value::integer(1)), std::hash<Value>{}(Value::boolean(true)));
}

TEST(Group, SortedAndDeduplicated) {
  const Group g{AgentId{2}, AgentId{0}, AgentId{2}};
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.members()[0], AgentId{0});
  EXPECT_TRUE(g.contains(AgentId{2}));
  EXPECT_FALSE(g.contains(AgentId{1}));
  EXPECT_EQ(g, (Group{AgentId{0}, AgentId{2}}));
}

TEST(State, SetOperations) {
  State s(3);
  s.set(VarId{0}, Value::integer(1));
  s.set(VarId{1}, Value::integer(2));
  State t(3);
  t.set(VarId{1}, Value::integer(2));
  t.set(VarId{2}, Value::integer(5));

  EXPECT_FALSE(s.subset_of(t));
  EXPECT_TRUE(s.intersect(t).subset_of(s));
  EXPECT_EQ(s.intersect(t).assigned_count(), 1u);
  EXPECT_TRUE(s.unite(t).is_total());

  State clash(3);
  clash.set(VarId{1}, Value::integer(9));
  EXPECT_THROW((void)s.unite(clash), ValidationError);
  EXPECT_EQ(s.overridden_by(clash).get(VarId{1}), Value::integer(9));

  State empty(3);
  EXPECT_TRUE(empty.subset_of(s));
  s.erase(VarId{0});
  EXPECT_FALSE(s.has(VarId{0}));
}

TEST(StateSequence, SliceAndExtend) {
  State s(1);
  s.set(VarId{0}, Value::integer(0));
  StateSequence seq(s);
  for (int i = 1; i < 4; ++i) {
    State next(1);
    next.set(VarId{0}, Value::integer(i));
    seq = seq.extended(next);
  }
  EXPECT_EQ(seq.size(), 4u);
  EXPECT_EQ(seq.last_index(), 3u);
  EXPECT_EQ(seq.slice(1).size(), 2u);
  EXPECT_EQ(seq.slice(3), seq);
  EXPECT_THROW((void)seq.slice(4), std::out_of_range);
  EXPECT_THROW((void)seq.at(4), std::out_of_range);
  EXPECT_THROW(StateSequence(std::vector<State>{}), ValidationError);
  EXPECT_NE(seq.hash(), seq.slice(2).hash());
}

TEST(Format, RendersAssignedVariablesOnly) {
  const auto sig = small_signature();
  State s(sig.variable_count());
  s.set(sig.variable_or_throw("n"), Value::integer(3));
  EXPECT_EQ(format_state(sig, s), "{n=3}");
  EXPECT_EQ(format_sequence(sig, StateSequence(s)), "[{n=3}]");
}
