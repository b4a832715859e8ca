// The identity catalog: every verifiable identity as data. A Combination is
// constant + sum of (multiplier, SeriesSpec) terms; an IdentityRecord pins an
// lhs and rhs Combination, a stable id, and a default verification depth.
// verify_identity materializes both sides and compares exactly below `depth`.
#pragma once

#include "qmordell/forms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qmordell {

struct Combination {
    Rational constant;
    std::vector<std::pair<Rational, SeriesSpec>> terms;

    Combination& add(const Rational& c, SeriesSpec s) {
        terms.emplace_back(c, std::move(s));
        return *this;
    }
};

QSeries eval_combination(const Combination& c, long depth);

struct IdentityRecord {
    enum class Family { Example, Lemma, Remark, Footnote };

    std::string id;
    Family family;
    Combination lhs;
    Combination rhs;
    long default_depth;

    // for Example records: the (p, k, tilde, arg_mult) of the matching F
    // builder, used by the Eisenstein-part consistency check
    struct FRef {
        long p;
        long k;
        bool tilde;
        long arg_mult;
    };
    std::optional<FRef> f_ref;
};

const std::vector<IdentityRecord>& identity_catalog();
const IdentityRecord& find_identity(const std::string& id);  // throws std::invalid_argument

// rhs minus the eta-quotient terms: by construction this equals the F builder
// output for records carrying f_ref
Combination eisenstein_part(const IdentityRecord& rec);

struct VerifyReport {
    std::string id;
    bool pass = false;
    long depth = 0;
    std::optional<long> first_mismatch;
    std::string lhs_at_mismatch;
    std::string rhs_at_mismatch;
};

VerifyReport verify_record(const IdentityRecord& rec, long depth);
VerifyReport verify_identity(const std::string& id, long depth);

struct VerifySummary {
    std::vector<VerifyReport> reports;
    long examples_total = 0, examples_passed = 0;
    long lemma_total = 0, lemma_passed = 0;
    long other_total = 0, other_passed = 0;
    bool all_pass = false;
};

// depth = nullopt: each record verifies at its own default depth
VerifySummary verify_all(std::optional<long> depth);

}  // namespace qmordell
