#include "blockmass/automaton.hpp"
#include "blockmass/enclosure.hpp"
#include "blockmass/errors.hpp"
#include "blockmass/genfun.hpp"
#include "blockmass/kempner.hpp"
#include "blockmass/rational_function.hpp"
#include "blockmass/words.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using blockmass::Block;
using blockmass::DigitString;
using blockmass::Enclosure;
using blockmass::Int;
using blockmass::Rational;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_cap()
{
    if (const char* env = std::getenv("BLOCKMASS_CAP")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("BLOCKMASS_CAP is not a valid integer");
        }
    }
    return blockmass::kDefaultEnumerationCap;
}

json coefficients_json(const std::vector<Rational>& coeffs)
{
    json arr = json::array();
    for (const auto& c : coeffs) {
        if (c.get_den() != 1) {
            throw std::logic_error("expected integer coefficient");
        }
        arr.push_back(c.get_num().get_str());
    }
    return arr;
}

json polynomial_json(const blockmass::Polynomial& poly)
{
    return coefficients_json(poly.coefficients());
}

json rational_function_json(const blockmass::RationalFunction& rf)
{
    return json{{"num", polynomial_json(rf.num())}, {"den", polynomial_json(rf.den())}};
}

json enclosure_json(const Enclosure& enc)
{
    const auto shared = enc.shared_decimal();
    return json{{"lower", blockmass::rational_str(enc.lower())},
                {"upper", blockmass::rational_str(enc.upper())},
                {"decimal", shared.digits},
                {"certified_digits", shared.certified_digits}};
}

json limit_json(const blockmass::LimitCheck& check)
{
    return json{{"k", check.k},
                {"depth", check.depth},
                {"sum", enclosure_json(check.sum)},
                {"target", enclosure_json(check.target)},
                {"certified_gap", blockmass::rational_str(check.certified_gap)},
                {"proven_gap", blockmass::rational_str(check.proven_gap)},
                {"bound", blockmass::rational_str(check.bound)},
                {"status", check.status_str()}};
}

int check_expectation(const std::string& expect, const Rational& got)
{
    if (blockmass::parse_rational(expect) == got) {
        return kExitOk;
    }
    std::cerr << "expectation failed: expected " << expect << ", got "
              << blockmass::rational_str(got) << "\n";
    return kExitVerificationFailed;
}

struct VerifyItem {
    std::string name;
    bool pass;
    std::string witness;
};

// Runs the full per-block verification: the identity battery, the automaton
// and mass theorems, measure stabilization, the finiteness bound, and the
// limit bound for k = 1..kmax.
std::vector<VerifyItem> run_verify(const Block& block, unsigned kmax, std::size_t maxlen,
                                   unsigned depth, bool inject_fault, std::uint64_t cap)
{
    std::vector<VerifyItem> items;
    const unsigned b = block.base();
    const std::size_t p = block.length();
    const Rational b_pow_p(blockmass::int_pow(Int(b), static_cast<unsigned long>(p)));

    blockmass::BatteryOptions opts;
    opts.max_length = maxlen;
    opts.max_k = kmax;
    opts.cap = cap;
    opts.corrupt_autocorrelation = inject_fault;
    for (const auto& item : blockmass::identity_battery(block, opts).items) {
        items.push_back({item.name, item.pass, item.witness});
    }

    {
        VerifyItem item{"stratified_equals_closed_form", true, ""};
        for (unsigned k = 0; k <= std::min(kmax, 5u); ++k) {
            if (!(blockmass::stratified_gf(block, k) == blockmass::gf_k(block, k))) {
                item.pass = false;
                item.witness = "k=" + std::to_string(k);
                break;
            }
        }
        items.push_back(std::move(item));
    }
    {
        VerifyItem item{"prefix_mass_theorem", true, ""};
        blockmass::OccurrenceAutomaton automaton(block);
        blockmass::MassTable table(automaton);
        const std::size_t max_s = 3;
        for (std::size_t len = 0; len <= max_s && item.pass; ++len) {
            blockmass::for_each_string(b, len, [&](const std::vector<std::uint32_t>& digits) {
                if (!item.pass) {
                    return;
                }
                const DigitString s(b, digits);
                const std::uint64_t kstar = blockmass::k_star(s, block, cap);
                const Rational expected =
                    blockmass::rational_pow(Rational(b),
                                            static_cast<long>(p) - static_cast<long>(len));
                for (std::uint64_t k = kstar + 1; k <= kmax; ++k) {
                    if (blockmass::prefix_mass(table, s, k) != expected) {
                        item.pass = false;
                        item.witness = "s=" + s.to_string() + " k=" + std::to_string(k);
                        return;
                    }
                }
            });
        }
        items.push_back(std::move(item));
    }
    {
        VerifyItem item{"proposition_d1", true, ""};
        blockmass::OccurrenceAutomaton automaton(block);
        blockmass::MassTable table(automaton);
        const Rational per_digit =
            blockmass::rational_pow(Rational(b), static_cast<long>(p) - 1);
        for (std::uint64_t k = 1; k <= kmax && item.pass; ++k) {
            Rational total(0);
            for (std::uint32_t d = 1; d < b; ++d) {
                const Rational m = blockmass::prefix_mass(table, DigitString(b, {d}), k);
                if (m != per_digit) {
                    item.pass = false;
                    item.witness = "digit=" + std::to_string(d) + " k=" + std::to_string(k);
                    break;
                }
                total += m;
            }
            if (item.pass && total != Rational(b - 1) * per_digit) {
                item.pass = false;
                item.witness = "k=" + std::to_string(k);
            }
        }
        items.push_back(std::move(item));
    }
    {
        VerifyItem item{"measure_stabilization", true, ""};
        for (unsigned l = 0; l <= 3 && item.pass; ++l) {
            const std::uint64_t k = l + 1;
            if (k > kmax) {
                break;
            }
            const Rational expected =
                blockmass::rational_pow(Rational(b),
                                        static_cast<long>(p) - static_cast<long>(l));
            const auto cells = blockmass::measure_histogram(block, k, l, cap);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (cells[i] != expected) {
                    item.pass = false;
                    item.witness = "l=" + std::to_string(l) + " cell=" + std::to_string(i);
                    break;
                }
            }
        }
        items.push_back(std::move(item));
    }
    {
        VerifyItem item{"histogram_mass_totals", true, ""};
        const unsigned l = std::min<unsigned>(2, static_cast<unsigned>(maxlen));
        for (std::uint64_t k = 0; k <= kmax && item.pass; ++k) {
            Rational total(0);
            for (const auto& cell : blockmass::measure_histogram(block, k, l, cap)) {
                total += cell;
            }
            if (total != blockmass::mass(block, static_cast<unsigned>(k))) {
                item.pass = false;
                item.witness = "k=" + std::to_string(k);
            }
        }
        items.push_back(std::move(item));
    }
    {
        VerifyItem item{"finiteness_bound", true, ""};
        std::size_t max_len = 0;
        std::uint64_t strings = 1;
        const std::uint64_t budget = std::min<std::uint64_t>(cap, 1u << 14);
        while (strings <= budget / b && max_len < maxlen) {
            strings *= b;
            ++max_len;
        }
        for (std::uint64_t k = 0; k <= kmax && item.pass; ++k) {
            const Rational limit =
                Rational(b) * blockmass::mass(block, static_cast<unsigned>(k));
            for (std::size_t len = 1; len <= max_len; ++len) {
                if (blockmass::partial_sum(block, k, len, cap) > limit) {
                    item.pass = false;
                    item.witness = "k=" + std::to_string(k) + " L=" + std::to_string(len);
                    break;
                }
            }
        }
        items.push_back(std::move(item));
    }
    for (std::uint64_t k = 1; k <= kmax; ++k) {
        VerifyItem item{"limit_bound_k" + std::to_string(k), true, ""};
        unsigned d = std::max(depth, blockmass::suggest_limit_depth(block, k));
        while (true) {
            blockmass::LimitCheck check = [&] {
                return blockmass::check_limit_bound(block, k, d, blockmass::kDefaultFractionBits,
                                                    cap);
            }();
            if (check.status == blockmass::LimitCheck::Status::verified) {
                break;
            }
            if (check.status == blockmass::LimitCheck::Status::violated) {
                item.pass = false;
                item.witness = "certified gap " + blockmass::rational_str(check.certified_gap) +
                               " exceeds bound " + blockmass::rational_str(check.bound);
                break;
            }
            // Undecided: widen and retry while the cap allows.
            try {
                blockmass::checked_string_count(b, d + 1, cap);
            } catch (const blockmass::CapExceeded&) {
                item.pass = false;
                item.witness = "undecided at depth " + std::to_string(d) +
                               " and the cap forbids going deeper";
                break;
            }
            ++d;
        }
        items.push_back(std::move(item));
    }
    return items;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact generating functions, measures, and certified harmonic sums for "
                 "digit-block occurrence counts"};
    app.require_subcommand(1);

    unsigned base = 0;
    std::string block_text;
    std::string format;
    std::uint64_t k = 0;
    std::uint64_t cap = 0;

    auto add_common = [&](CLI::App* cmd, bool with_block = true) {
        cmd->add_option("--base,-b", base, "radix b >= 2")->required();
        if (with_block) {
            cmd->add_option("--block,-w", block_text,
                            "digit block; compact for b <= 10, comma-separated otherwise")
                ->required();
        }
        cmd->add_option("--cap", cap, "enumeration cap (default BLOCKMASS_CAP or 2^24)");
    };

    auto* autocorr = app.add_subcommand("autocorr", "autocorrelation polynomial of the block");
    add_common(autocorr);
    autocorr->add_option("--format", format, "text|json");

    auto* genfun = app.add_subcommand("genfun", "generating function of k-admissible strings");
    add_common(genfun);
    genfun->add_option("--k,-k", k, "occurrence count")->required();
    genfun->add_option("--format", format, "json|text");

    std::size_t maxlen = 0;
    auto* coeffs = app.add_subcommand("coeffs", "series coefficients N_w(k, l)");
    add_common(coeffs);
    coeffs->add_option("--k,-k", k, "occurrence count")->required();
    coeffs->add_option("--maxlen,-L", maxlen, "largest length l")->required();
    coeffs->add_option("--format", format, "text|json");

    std::optional<std::string> expect;
    auto* mass_cmd = app.add_subcommand("mass", "total mass M_w(k)");
    add_common(mass_cmd);
    mass_cmd->add_option("--k,-k", k, "occurrence count")->required();
    mass_cmd->add_option("--format", format, "text|json");
    mass_cmd->add_option("--expect", expect, "fail unless the result equals this rational");

    std::string from_text;
    std::string to_text;
    auto* measure_cmd = app.add_subcommand("measure", "mu_k of a b-imal interval");
    add_common(measure_cmd);
    measure_cmd->add_option("--k,-k", k, "occurrence count")->required();
    measure_cmd->add_option("--from", from_text, "left endpoint, n or n/b^l")->required();
    measure_cmd->add_option("--to", to_text, "right endpoint, n or n/b^l")->required();
    measure_cmd->add_option("--format", format, "text|json");
    measure_cmd->add_option("--expect", expect, "fail unless the result equals this rational");

    unsigned resolution = 0;
    auto* hist = app.add_subcommand("hist", "histogram of mu_k at resolution l (CSV)");
    add_common(hist);
    hist->add_option("--k,-k", k, "occurrence count")->required();
    hist->add_option("--res,-l", resolution, "resolution l")->required();

    unsigned depth = 0;
    unsigned fbits = blockmass::kDefaultFractionBits;
    auto* sum_cmd = app.add_subcommand("sum", "certified enclosure of S_w(k)");
    add_common(sum_cmd);
    sum_cmd->add_option("--k,-k", k, "occurrence count")->required();
    sum_cmd->add_option("--depth,-d", depth, "refinement depth >= 1")->required();
    sum_cmd->add_option("--precision,-F", fbits, "fraction bits (default 128)");
    sum_cmd->add_option("--expect", expect, "fail unless the enclosure contains this rational");

    auto* logb = app.add_subcommand("logb", "certified enclosure of log(b)");
    add_common(logb, false);
    logb->add_option("--precision,-F", fbits, "fraction bits (default 128)");

    auto* limit = app.add_subcommand("limit", "check |S_w(k) - b^p log b| against the bound");
    add_common(limit);
    limit->add_option("--k,-k", k, "occurrence count >= 1")->required();
    limit->add_option("--depth,-d", depth, "refinement depth (default: suggested)");
    limit->add_option("--precision,-F", fbits, "fraction bits (default 128)");

    unsigned kmax = 4;
    bool inject_fault = false;
    auto* verify = app.add_subcommand("verify", "full verification battery for one block");
    add_common(verify);
    verify->add_option("--kmax", kmax, "largest occurrence count (default 4)");
    verify->add_option("--maxlen,-L", maxlen, "enumeration length for coefficient checks")
        ->required();
    verify->add_option("--depth,-d", depth, "starting depth for the limit checks")->required();
    verify->add_flag("--inject-fault", inject_fault,
                     "negative control: corrupt one autocorrelation flag");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help
        }
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cap == 0) {
            cap = default_cap();
        }

        if (autocorr->parsed()) {
            const Block block = blockmass::parse_block(base, block_text);
            const auto corr = blockmass::autocorrelation(block);
            if (format == "json") {
                json out{{"base", base},
                         {"block", block.to_string()},
                         {"coefficients", json::array()},
                         {"periods", json::array()}};
                for (auto flag : corr.flags) {
                    out["coefficients"].push_back(static_cast<int>(flag));
                }
                out["periods"].push_back(0);
                for (auto i : corr.positive_periods()) {
                    out["periods"].push_back(i);
                }
                std::cout << out.dump() << "\n";
            } else {
                std::string sep;
                std::cout << "[";
                for (auto flag : corr.flags) {
                    std::cout << sep << static_cast<int>(flag);
                    sep = ",";
                }
                std::cout << "]\n";
            }
            return kExitOk;
        }
        if (genfun->parsed()) {
            const Block block = blockmass::parse_block(base, block_text);
            const auto rf = blockmass::gf_k(block, static_cast<unsigned>(k));
            std::cout << rational_function_json(rf).dump() << "\n";
            return kExitOk;
        }
        if (coeffs->parsed()) {
            const Block block = blockmass::parse_block(base, block_text);
            const auto values =
                blockmass::gf_k(block, static_cast<unsigned>(k)).series_coefficients(maxlen);
            if (format == "json") {
                std::cout << json{{"coefficients", coefficients_json(values)}}.dump() << "\n";
            } else {
                std::string sep;
                for (const auto& c : values) {
                    std::cout << sep << c.get_num().get_str();
                    sep = ",";
                }
                std::cout << "\n";
            }
            return kExitOk;
        }
        if (mass_cmd->parsed()) {
            const Block block = blockmass::parse_block(base, block_text);
            const Rational m = blockmass::mass(block, static_cast<unsigned>(k));
            if (format == "json") {
                std::cout << json{{"mass", blockmass::rational_str(m)}}.dump() << "\n";
            } else {
                std::cout << blockmass::rational_str(m) << "\n";
            }
            return expect ? check_expectation(*expect, m) : kExitOk;
        }
        if (measure_cmd->parsed()) {
            const Block block = blockmass::parse_block(base, block_text);
            const auto interval =
                blockmass::BimalInterval::from_endpoints(base, from_text, to_text);
            const Rational m = blockmass::measure_interval(block, k, interval, cap);
            if (format == "json") {
                std::cout << json{{"measure", blockmass::rational_str(m)}}.dump() << "\n";
            } else {
                std::cout << blockmass::rational_str(m) << "\n";
            }
            return expect ? check_expectation(*expect, m) : kExitOk;
        }
        if (hist->parsed()) {
            const Block block = blockmass::parse_block(base, block_text);
            const auto cells = blockmass::measure_histogram(block, k, resolution, cap);
            const Int denom = blockmass::int_pow(Int(base), resolution);
            const std::string denom_str = denom.get_str();
            std::cout << "cell_index,n_over_bl,mass_num,mass_den\n";
            for (std::size_t i = 0; i < cells.size(); ++i) {
                std::cout << i << "," << i << "/" << denom_str << ","
                          << cells[i].get_num().get_str() << ","
                          << cells[i].get_den().get_str() << "\n";
            }
            return kExitOk;
        }
        if (sum_cmd->parsed()) {
            const Block block = blockmass::parse_block(base, block_text);
            const Enclosure enc = blockmass::enclose_sum(block, k, depth, fbits, cap);
            std::cout << enclosure_json(enc).dump() << "\n";
            if (expect) {
                const Rational target = blockmass::parse_rational(*expect);
                if (!enc.contains(target)) {
                    std::cerr << "expectation failed: enclosure does not contain " << *expect
                              << "\n";
                    return kExitVerificationFailed;
                }
            }
            return kExitOk;
        }
        if (logb->parsed()) {
            std::cout << enclosure_json(blockmass::log_enclosure(base, fbits)).dump() << "\n";
            return kExitOk;
        }
        if (limit->parsed()) {
            const Block block = blockmass::parse_block(base, block_text);
            if (depth == 0) {
                depth = blockmass::suggest_limit_depth(block, k);
            }
            const auto check = blockmass::check_limit_bound(block, k, depth, fbits, cap);
            std::cout << limit_json(check).dump() << "\n";
            return check.status == blockmass::LimitCheck::Status::verified
                       ? kExitOk
                       : kExitVerificationFailed;
        }
        if (verify->parsed()) {
            const Block block = blockmass::parse_block(base, block_text);
            const auto items = run_verify(block, kmax, maxlen, depth, inject_fault, cap);
            bool all_pass = true;
            json out{{"base", base},     {"block", block.to_string()}, {"kmax", kmax},
                     {"maxlen", maxlen}, {"depth", depth},             {"items", json::array()}};
            for (const auto& item : items) {
                all_pass = all_pass && item.pass;
                out["items"].push_back(
                    {{"name", item.name}, {"pass", item.pass}, {"witness", item.witness}});
            }
            out["pass"] = all_pass;
            std::cout << out.dump() << "\n";
            return all_pass ? kExitOk : kExitVerificationFailed;
        }
    } catch (const blockmass::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
