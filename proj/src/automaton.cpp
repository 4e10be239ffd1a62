#include "blockmass/automaton.hpp"

#include "blockmass/errors.hpp"
#include "blockmass/linear_solve.hpp"

#include <stdexcept>

namespace blockmass {

OccurrenceAutomaton::OccurrenceAutomaton(Block block) : block_(std::move(block))
{
    const auto& w = block_.digits();
    const std::size_t p = w.size();
    const unsigned b = block_.base();

    // KMP prefix function of w.
    std::vector<std::size_t> border(p, 0);
    for (std::size_t i = 1; i < p; ++i) {
        std::size_t len = border[i - 1];
        while (len > 0 && w[i] != w[len]) {
            len = border[len - 1];
        }
        if (w[i] == w[len]) {
            ++len;
        }
        border[i] = len;
    }

    next_.assign(p * b, 0);
    emit_.assign(p * b, 0);
    for (std::size_t q = 0; q < p; ++q) {
        for (std::uint32_t d = 0; d < b; ++d) {
            if (d == w[q]) {
                const std::size_t matched = q + 1;
                if (matched == p) {
                    next_[q * b + d] = static_cast<unsigned>(border[p - 1]);
                    emit_[q * b + d] = 1;
                } else {
                    next_[q * b + d] = static_cast<unsigned>(matched);
                }
            } else if (q == 0) {
                next_[q * b + d] = 0;
            } else {
                next_[q * b + d] = next_[border[q - 1] * b + d];
            }
        }
    }
}

OccurrenceAutomaton::RunResult OccurrenceAutomaton::run(
    const std::vector<std::uint32_t>& digits) const
{
    RunResult r;
    for (std::uint32_t d : digits) {
        r.emissions += emits(r.state, d) ? 1 : 0;
        r.state = next(r.state, d);
    }
    return r;
}

OccurrenceAutomaton::RunResult OccurrenceAutomaton::run(const DigitString& text) const
{
    if (text.base() != block_.base()) {
        throw std::invalid_argument("base mismatch between automaton and input string");
    }
    return run(text.digits());
}

std::vector<std::vector<unsigned>> OccurrenceAutomaton::transition_counts(bool emitting) const
{
    const unsigned p = state_count();
    const unsigned b = block_.base();
    std::vector<std::vector<unsigned>> counts(p, std::vector<unsigned>(p, 0));
    for (unsigned q = 0; q < p; ++q) {
        for (std::uint32_t d = 0; d < b; ++d) {
            if (emits(q, d) == emitting) {
                ++counts[q][next(q, d)];
            }
        }
    }
    return counts;
}

MassTable::MassTable(const OccurrenceAutomaton& automaton) : automaton_(automaton)
{
    const unsigned p = automaton_.state_count();
    const Rational inv_b = make_rational(Int(1), Int(automaton_.block().base()));
    const auto b0 = automaton_.transition_counts(false);
    m0_matrix_.assign(p, std::vector<Rational>(p, Rational(0)));
    for (unsigned q = 0; q < p; ++q) {
        for (unsigned r = 0; r < p; ++r) {
            m0_matrix_[q][r] = Rational(q == r ? 1 : 0) - inv_b * Rational(b0[q][r]);
        }
    }
}

void MassTable::ensure(unsigned jmax)
{
    const unsigned p = automaton_.state_count();
    const Rational inv_b = make_rational(Int(1), Int(automaton_.block().base()));
    const auto b1 = automaton_.transition_counts(true);
    while (rows_.size() <= jmax) {
        const unsigned j = static_cast<unsigned>(rows_.size());
        std::vector<Rational> rhs(p, Rational(j == 0 ? 1 : 0));
        if (j > 0) {
            const auto& prev = rows_[j - 1];
            for (unsigned q = 0; q < p; ++q) {
                Rational acc(0);
                for (unsigned r = 0; r < p; ++r) {
                    if (b1[q][r] != 0) {
                        acc += Rational(b1[q][r]) * prev[r];
                    }
                }
                rhs[q] += inv_b * acc;
            }
        }
        rows_.push_back(solve_linear_system(m0_matrix_, rhs));
    }
}

const Rational& MassTable::value(unsigned j, unsigned state)
{
    ensure(j);
    return rows_[j][state];
}

Rational prefix_mass(MassTable& table, const DigitString& s, std::uint64_t k)
{
    const auto run = table.automaton().run(s);
    if (k < run.emissions) {
        return Rational(0);
    }
    const std::uint64_t j = k - run.emissions;
    if (j > std::uint64_t(1) << 20) {
        throw CapExceeded("mass table depth " + std::to_string(j) + " is unreasonable");
    }
    const Rational weight =
        rational_pow(Rational(table.automaton().block().base()), -static_cast<long>(s.length()));
    return weight * table.value(static_cast<unsigned>(j), run.state);
}

Rational prefix_mass(const Block& block, const DigitString& s, std::uint64_t k)
{
    MassTable table{OccurrenceAutomaton(block)};
    return prefix_mass(table, s, k);
}

RationalFunction stratified_gf(const Block& block, unsigned k, unsigned max_k)
{
    if (k > max_k) {
        throw CapExceeded("occurrence count " + std::to_string(k) + " exceeds cap " +
                          std::to_string(max_k));
    }
    const OccurrenceAutomaton automaton(block);
    const unsigned p = automaton.state_count();
    const auto b0 = automaton.transition_counts(false);
    const auto b1 = automaton.transition_counts(true);
    const RationalFunction t = RationalFunction::monomial_power(1);

    std::vector<std::vector<RationalFunction>> matrix(
        p, std::vector<RationalFunction>(p, RationalFunction()));
    for (unsigned q = 0; q < p; ++q) {
        for (unsigned r = 0; r < p; ++r) {
            RationalFunction entry = RationalFunction::constant(Rational(q == r ? 1 : 0));
            if (b0[q][r] != 0) {
                entry = entry - t * RationalFunction::constant(Rational(b0[q][r]));
            }
            matrix[q][r] = std::move(entry);
        }
    }

    std::vector<RationalFunction> current;
    for (unsigned j = 0; j <= k; ++j) {
        std::vector<RationalFunction> rhs(
            p, RationalFunction::constant(Rational(j == 0 ? 1 : 0)));
        if (j > 0) {
            for (unsigned q = 0; q < p; ++q) {
                RationalFunction acc;
                for (unsigned r = 0; r < p; ++r) {
                    if (b1[q][r] != 0) {
                        acc = acc + RationalFunction::constant(Rational(b1[q][r])) * current[r];
                    }
                }
                rhs[q] = rhs[q] + t * acc;
            }
        }
        current = solve_linear_system(matrix, rhs);
    }
    return current[0];
}

} // namespace blockmass
