// Catalog tests: shape of the identity table, fast verification passes for
// every record, the Eisenstein-part consistency between the declarative rhs
// and the F builders, and mutation sensitivity (any perturbed multiplier or
// constant must flip verification to failure close to the front).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmordell/catalog.hpp"

#include <set>

using namespace qmordell;

TEST_CASE("catalog shape: ids, families, and counts") {
    const auto& cat = identity_catalog();
    CHECK(cat.size() == 54);
    std::set<std::string> ids;
    long examples = 0, lemmas = 0, remarks = 0, footnotes = 0;
    for (const auto& rec : cat) {
        CHECK(ids.insert(rec.id).second);  // unique ids
        CHECK(rec.default_depth > 0);
        switch (rec.family) {
            case IdentityRecord::Family::Example: ++examples; break;
            case IdentityRecord::Family::Lemma: ++lemmas; break;
            case IdentityRecord::Family::Remark: ++remarks; break;
            case IdentityRecord::Family::Footnote: ++footnotes; break;
        }
        // every example record carries the F reference used for consistency
        if (rec.family == IdentityRecord::Family::Example) CHECK(rec.f_ref.has_value());
    }
    CHECK(examples == 20);
    CHECK(lemmas == 27);
    CHECK(remarks == 6);
    CHECK(footnotes == 1);

    // the ids named by the interface contract all resolve
    for (const char* id : {"s3k1", "t3k1", "s3k4", "t7k3", "s23k1", "lemma-E2kvan-k2",
                           "lemma-E2khalf-p3-k1", "lemma-E0half-p7-k0", "lemma-E7half-p23-k2",
                           "remark-Ghalf-p11-k1", "footnote-b"})
        CHECK(find_identity(id).id == id);
    CHECK_THROWS_WITH_AS(find_identity("s5k1"), doctest::Contains("unknown identity"),
                         std::invalid_argument);
}

TEST_CASE("every record verifies at a fast unit-test depth") {
    for (const auto& rec : identity_catalog()) {
        INFO("id = ", rec.id);
        const VerifyReport rep = verify_record(rec, 60);
        CHECK(rep.pass);
        CHECK(rep.depth == 60);
        CHECK(!rep.first_mismatch.has_value());
        CHECK(rep.id == rec.id);
    }
}

TEST_CASE("verify_identity dispatches by id and validates depth") {
    const VerifyReport rep = verify_identity("s3k2", 50);
    CHECK(rep.pass);
    CHECK_THROWS_WITH_AS(verify_identity("s3k2", 0), doctest::Contains("insufficient depth"),
                         std::domain_error);
    CHECK_THROWS_AS(verify_identity("s3k2", -5), std::domain_error);
    CHECK_THROWS_AS(verify_identity("bogus", 50), std::invalid_argument);
}

TEST_CASE("verify_all aggregates by family") {
    const VerifySummary s = verify_all(50);
    CHECK(s.all_pass);
    CHECK(s.examples_total == 20);
    CHECK(s.examples_passed == 20);
    CHECK(s.lemma_total == 27);
    CHECK(s.lemma_passed == 27);
    CHECK(s.other_total == 7);
    CHECK(s.other_passed == 7);
    CHECK(s.reports.size() == 54);
}

TEST_CASE("eisenstein part of each example equals the F builder") {
    // The declarative rhs minus its eta terms must reproduce F (resp. Ftilde)
    // exactly: this ties the catalog's Lambert data to the Eisenstein engine.
    const long depth = 60;
    for (const auto& rec : identity_catalog()) {
        if (!rec.f_ref) continue;
        INFO("id = ", rec.id);
        const auto& fr = *rec.f_ref;
        const SeriesSpec fspec = fr.tilde ? SeriesSpec::F_tilde(fr.p, fr.k, fr.arg_mult)
                                          : SeriesSpec::F(fr.p, fr.k, fr.arg_mult);
        const QSeries from_catalog = eval_combination(eisenstein_part(rec), depth);
        const QSeries from_builder = build_series(fspec, depth);
        const auto diff =
            first_difference(from_catalog, from_builder,
                             std::min(from_catalog.order(), from_builder.order()));
        CHECK(!diff.has_value());
    }
}

TEST_CASE("mutation sensitivity: every perturbed record fails fast") {
    const long depth = 40;
    for (const auto& rec : identity_catalog()) {
        // perturbing the rhs constant breaks the identity at the constant term
        {
            IdentityRecord mut = rec;
            mut.rhs.constant += Rational(1);
            const VerifyReport rep = verify_record(mut, depth);
            INFO("id = ", rec.id, " (rhs constant)");
            CHECK(!rep.pass);
            REQUIRE(rep.first_mismatch.has_value());
            CHECK(*rep.first_mismatch == 0);
        }
        // perturbing any single term multiplier breaks it near the front —
        // except when the term's series is identically zero (for weight 1 the
        // two cusp expansions coincide, so Gtilde_1 vanishes and its term in
        // the k0 remark records is undetectable by coefficient matching)
        for (size_t t = 0; t < rec.rhs.terms.size(); ++t) {
            const QSeries term = build_series(rec.rhs.terms[t].second, depth);
            if (term.is_zero()) {
                CHECK(rec.id.substr(0, 12) == "remark-Ghalf");
                CHECK(rec.id.substr(rec.id.size() - 2) == "k0");
                continue;
            }
            IdentityRecord mut = rec;
            mut.rhs.terms[t].first += Rational(1);
            const VerifyReport rep = verify_record(mut, depth);
            INFO("id = ", rec.id, " (rhs term ", t, ")");
            CHECK(!rep.pass);
            REQUIRE(rep.first_mismatch.has_value());
            // the difference is exactly one copy of the term's series, so the
            // mismatch surfaces precisely at that term's valuation
            CHECK(*rep.first_mismatch == term.valuation());
        }
        for (size_t t = 0; t < rec.lhs.terms.size(); ++t) {
            IdentityRecord mut = rec;
            mut.lhs.terms[t].first += Rational(1);
            const VerifyReport rep = verify_record(mut, depth);
            INFO("id = ", rec.id, " (lhs term ", t, ")");
            CHECK(!rep.pass);
        }
    }
}

TEST_CASE("eval_combination honors constants and multipliers") {
    Combination c;
    c.constant = Rational(5);
    c.add(Rational(2), SeriesSpec::z(3));
    const QSeries s = eval_combination(c, 10);
    // 5 + 2*z_3 = 5 + 2(1 + 2q + ...) = 7 + 4q + ...
    CHECK(s.coefficient(0) == Rational(7));
    CHECK(s.coefficient(1) == Rational(4));
    const QSeries empty = eval_combination(Combination{}, 6);
    CHECK(empty.is_zero());
    CHECK(empty.order() == 6);
}
