#pragma once

#include "blockmass/rational_function.hpp"
#include "blockmass/words.hpp"

#include <cstdint>
#include <vector>

namespace blockmass {

/// Occurrence-counting automaton for a block w of length p. State q is the
/// length of the longest suffix of the input read so far that is a proper
/// prefix of w, so there are exactly p states. A transition emits when it
/// completes an occurrence of w, i.e. from state p-1 on the last digit of w;
/// the successor state then keeps the longest reusable overlap, so emissions
/// count possibly overlapping occurrences.
class OccurrenceAutomaton {
public:
    explicit OccurrenceAutomaton(Block block);

    const Block& block() const { return block_; }
    unsigned state_count() const { return static_cast<unsigned>(block_.length()); }

    unsigned next(unsigned state, std::uint32_t digit) const
    {
        return next_[state * block_.base() + digit];
    }
    bool emits(unsigned state, std::uint32_t digit) const
    {
        return emit_[state * block_.base() + digit] != 0;
    }

    struct RunResult {
        unsigned state = 0;
        std::uint64_t emissions = 0;
    };
    RunResult run(const std::vector<std::uint32_t>& digits) const;
    RunResult run(const DigitString& text) const;

    // Transition counts split by emission: entry (q, q') is the number of
    // digits d with next(q, d) = q' and the requested emission flag. These
    // are the transfer matrices behind both the mass systems and the
    // stratified generating functions.
    std::vector<std::vector<unsigned>> transition_counts(bool emitting) const;

private:
    Block block_;
    std::vector<unsigned> next_;
    std::vector<std::uint8_t> emit_;
};

/// Exact masses m_j(q): total weight b^{-|y|} over strings y that, read from
/// state q, produce exactly j emissions (the empty string contributes 1 to
/// j = 0). Row j solves the linear system
///   (I - B0/b) m_j = [j=0] 1 + (1/b) B1 m_{j-1},
/// which is nonsingular because from every state some digit sequence forces
/// an emission. Rows are computed on demand and kept.
class MassTable {
public:
    explicit MassTable(const OccurrenceAutomaton& automaton);

    const OccurrenceAutomaton& automaton() const { return automaton_; }
    unsigned rows_computed() const { return static_cast<unsigned>(rows_.size()); }

    void ensure(unsigned jmax);
    const Rational& value(unsigned j, unsigned state);

private:
    OccurrenceAutomaton automaton_;
    std::vector<std::vector<Rational>> m0_matrix_; // I - B0/b
    std::vector<std::vector<Rational>> rows_;
};

// Total mass of the k-admissible strings with prefix s, each string weighted
// b^{-length}: b^{-|s|} m_{k - k_w(s)}(q_s), and 0 when k < k_w(s).
Rational prefix_mass(MassTable& table, const DigitString& s, std::uint64_t k);
Rational prefix_mass(const Block& block, const DigitString& s, std::uint64_t k);

// Z_w(k) derived through the transfer matrices over the rational-function
// field: solve (I - t B0) G_j = [j=0] 1 + t B1 G_{j-1} and read state 0.
// Independent of the closed forms in genfun, against which it is checked.
RationalFunction stratified_gf(const Block& block, unsigned k, unsigned max_k = 64);

} // namespace blockmass
