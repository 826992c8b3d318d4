#pragma once

#include <utility>

#include "wh2dl/qct/qct.hpp"
#include "wh2dl/text/token.hpp"

namespace wh2dl::qct {

// Kind of the first (or only) wh-subquery. Throws NoWhToken, UnsupportedKind.
QueryKind classify_query_kind(const text::TokenSequence& seq);

// Compound, then complex, then simple. Throws CharacterizationFailure when no
// template fits; never returns a partially filled QCT.
QCT characterize(const text::TokenSequence& seq);

QCT characterize_simple(const text::TokenSequence& seq);
QCT characterize_complex(const text::TokenSequence& seq);
QCT characterize_compound(const text::TokenSequence& seq);

// Final desire slot of a subquery whose structures are known. Where/When and
// quantitative/computational how force their implicit modes; an empty head
// becomes ImplicitDefinition.
DesireSlot detect_implicit_desire(const SubQCT& partial);

// Content between the R1 span and the R2 span, both [begin, end) token ranges.
// An empty range yields an Explicit slot with an empty head.
DesireSlot extract_explicit_desire(const text::TokenSequence& seq,
                                   std::pair<std::size_t, std::size_t> r1,
                                   std::pair<std::size_t, std::size_t> r2);

SubjectBinding resolve_r2_subject(const SubQCT& sub);

// None for non-clausal structures.
Dependency detect_clause_dependency(const SubQCT& sub, std::size_t clause);

Form infer_form(const QCT& q);

}  // namespace wh2dl::qct
