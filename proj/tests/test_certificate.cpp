#include <gtest/gtest.h>

#include "bnint/prover.hpp"

using namespace bnint;

namespace {

Certificate sample() {
    static Certifier c;
    return c.certify({13, 2, 6, 1, 0});
}

std::optional<Tuple> first_rule_node(const Certificate& c) {
    for (const auto& [t, j] : c.nodes)
        if (!j.is_axiom() && !j.children.empty()) return t;
    return std::nullopt;
}

}  // namespace

TEST(Certificate, ShapeOfGatheredTuple) {
    auto c = sample();
    EXPECT_EQ(c.root, (Tuple{13, 2, 6, 1, 0}));
    EXPECT_EQ(c.nodes.at(c.root).rule, RuleId::GatherLines);
    EXPECT_EQ(c.nodes.at(c.root).children, (std::vector<Tuple>{{8, 2, 6, 1, 0}}));
    EXPECT_TRUE(verify_certificate(c, AxiomSet::standard()));
    EXPECT_LE(c.depth(), c.root.r + c.root.d + c.root.m);
}

TEST(Certificate, JsonRoundTrip) {
    auto c = sample();
    auto j = c.to_json();
    EXPECT_EQ(j["schema"], kCertificateSchema);
    auto back = Certificate::from_json(j);
    EXPECT_EQ(back.root, c.root);
    EXPECT_EQ(back.nodes, c.nodes);
    EXPECT_EQ(back.to_json(), j);
    EXPECT_TRUE(verify_certificate(back, AxiomSet::standard()));
}

TEST(Certificate, MalformedJsonIsRejected) {
    auto j = sample().to_json();
    auto wrong_schema = j;
    wrong_schema["schema"] = "something-else/9";
    EXPECT_THROW(Certificate::from_json(wrong_schema), DomainError);
    EXPECT_THROW(Certificate::from_json(nlohmann::json::array()), DomainError);
    auto no_nodes = j;
    no_nodes.erase("nodes");
    EXPECT_THROW(Certificate::from_json(no_nodes), DomainError);
}

TEST(Certificate, TamperedChildIsCaught) {
    auto c = sample();
    auto at = first_rule_node(c);
    ASSERT_TRUE(at);
    auto& j = c.nodes.at(*at);
    Tuple old = j.children[0];
    Tuple moved = old;
    moved.d -= 1;
    j.children[0] = moved;
    auto v = verify_certificate(c, AxiomSet::standard());
    EXPECT_EQ(v.failure, VerifyFailure::ChildMismatch) << v.diagnostic;
}

TEST(Certificate, CycleIsCaught) {
    auto c = sample();
    // send the first child back up to the root
    Tuple child = c.nodes.at(c.root).children[0];
    Justification back;
    back.rule = RuleId::GatherLines;
    back.children = {c.root};
    c.nodes[child] = back;
    auto v = verify_certificate(c, AxiomSet::standard());
    EXPECT_EQ(v.failure, VerifyFailure::MeasureViolation) << v.diagnostic;
}

TEST(Certificate, MissingPiecesAreCaught) {
    auto c = sample();
    auto no_child = c;
    no_child.nodes.erase(c.nodes.at(c.root).children[0]);
    EXPECT_EQ(verify_certificate(no_child, AxiomSet::standard()).failure, VerifyFailure::MissingNode);

    auto no_root = c;
    no_root.nodes.erase(c.root);
    EXPECT_EQ(verify_certificate(no_root, AxiomSet::standard()).failure, VerifyFailure::MissingRoot);
}

TEST(Certificate, FalseAxiomIsCaught) {
    auto c = sample();
    c.nodes[c.root] = Justification::from_axiom(AxiomTag::Sporadic30);
    EXPECT_EQ(verify_certificate(c, AxiomSet::standard()).failure, VerifyFailure::AxiomNotMember);
}

TEST(Certificate, WrongParamsAreRejected) {
    Certificate c;
    c.root = {22, 7, 14, 0, 11};
    Justification j;
    j.rule = RuleId::Master111;
    j.params.ell_prime = 0;
    j.params.m_prime = 2;
    j.params.d_prime = 22;
    j.params.sum_n = 13;  // wrong parity
    c.nodes[c.root] = j;
    EXPECT_EQ(verify_certificate(c, AxiomSet::standard()).failure, VerifyFailure::RuleRejected);
}

TEST(Certificate, NonGoodChildFailsInGoodMode) {
    Certificate c;
    c.root = {4, 1, 3, 0, 3};
    Justification j;
    j.rule = RuleId::PancakeOnions;
    j.children = {{4, 1, 3, 0, 1}};
    c.nodes[c.root] = j;
    Justification leaf;
    leaf.rule = RuleId::GatherLines;
    c.nodes[{4, 1, 3, 0, 1}] = leaf;
    EXPECT_EQ(verify_certificate(c, AxiomSet::standard()).failure, VerifyFailure::NotGood);
}

TEST(Certificate, ExtraAxiomsCount) {
    AxiomSet ax = AxiomSet::standard();
    Tuple t{6, 1, 5, 3, 0};
    EXPECT_FALSE(ax.contains(t));
    ax.load_extra_json({{"axioms", {{{"tuple", {6, 1, 5, 3, 0}}, {"citation", "by hand"}}}}});
    EXPECT_EQ(ax.classify(t), AxiomTag::Extra);
    Certificate c;
    c.root = t;
    c.nodes[t] = Justification::from_axiom(AxiomTag::Extra);
    EXPECT_TRUE(verify_certificate(c, ax));
    EXPECT_FALSE(verify_certificate(c, AxiomSet::standard()));
}

TEST(Axioms, Families) {
    auto ax = AxiomSet::standard();
    EXPECT_EQ(ax.classify({3, 0, 2, 0, 0}), AxiomTag::SmallR);
    EXPECT_EQ(ax.classify({11, 2, 9, 0, 0}), AxiomTag::Delta1Base);
    EXPECT_EQ(ax.classify({6, 4, 3, 0, 0}), AxiomTag::CanonicalEven);
    EXPECT_EQ(ax.classify({9, 2, 5, 0, 0}), AxiomTag::Sporadic30);
    EXPECT_FALSE(ax.contains({13, 2, 6, 1, 0}));
    ax.enable(AxiomTag::SmallR, false);
    EXPECT_FALSE(ax.contains({3, 0, 2, 0, 0}));
    for (auto tag : {AxiomTag::SmallR, AxiomTag::Delta1Base, AxiomTag::Sporadic30, AxiomTag::CanonicalEven, AxiomTag::Extra})
        EXPECT_EQ(axiom_from_name(axiom_name(tag)), tag);
}
