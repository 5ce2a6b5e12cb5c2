#pragma once

#include <string>
#include <vector>

#include "realcong/blocks.hpp"
#include "realcong/pencil.hpp"

namespace realcong {

enum class FormKind { HS, FHS, Form1, Form2, LW };

enum class Ambiguity { None, SignOfN, SignOfA };

// A direct sum of canonical blocks of one kind, kept in canonical order, with
// per-block ambiguity flags mirroring what the Kronecker data cannot decide.
struct CanonicalForm {
    FormKind kind = FormKind::Form1;
    std::vector<CanonicalBlock> blocks;
    std::vector<Ambiguity> flags;  // parallel to blocks
    std::vector<std::string> diagnostics;

    void normalize_order();
    std::size_t total_size() const;
    std::string to_spec() const;  // "+"-joined block specs
    std::vector<std::size_t> ambiguous_indices() const;
};

// Multiset equality of the blocks, treating flagged parameters as equal up to
// the declared sign (sign of N, sign of a inside a rotation N).
bool equal_up_to_ambiguity(const CanonicalForm& x, const CanonicalForm& y);

// Invert the real-Kronecker table of (A^T, A) into the four-type form.
// Throws std::invalid_argument("not realizable as a real congruence class")
// when the pairing rules fail.  Sign resolution runs afterwards.
CanonicalForm classify_form1(const RatMat& a);
CanonicalForm classify_form2(const RatMat& a);

// Enumerate sign assignments over the flagged blocks (capped) and keep those
// whose congruence-invariant profile matches the input's.
CanonicalForm resolve_signs(const RatMat& a, CanonicalForm form);

CanonicalForm form1_to_form2(const CanonicalForm& f);
CanonicalForm form2_to_form1(const CanonicalForm& f);
CanonicalForm hs_to_fhs(const CanonicalForm& f);

// Table image of one Lee-Weinberg block in the four-type form (degenerate
// parameter combinations only when allow_degenerate).
CanonicalForm lw_to_form1(const CanonicalBlock& blk, bool allow_degenerate = false);

struct ConsistencyReport {
    bool consistent = false;
    std::string details;
};

// classify_form1(realize(blk)) against lw_to_form1(blk), plus the proof-level
// pencil facts for the alpha3/beta4/beta5 families.
ConsistencyReport classify_lw_consistency(const CanonicalBlock& blk);

}  // namespace realcong
