#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "document.hpp"
#include "trinil/lab.hpp"

namespace trinil::cli {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ParseError("cannot open '" + path + "'");
    buf << file.rdbuf();
    return buf.str();
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::InadmissibleModulus: return kExitInadmissible;
        case ErrorCode::FallbackBudgetExhausted: return kExitBudgetExhausted;
        case ErrorCode::InvalidArgument:
        case ErrorCode::EnumerationTooLarge: return kExitParseError;
        default: return kExitVerificationFailed;
    }
}

// Wraps a command body so that every failure maps onto an exit code.
template <class Body>
int guarded(Streams io, Body&& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        io.err << "parse error: " << e.what() << '\n';
        return kExitParseError;
    } catch (const Error& e) {
        io.err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
}

json optional_json(const std::optional<std::uint64_t>& v) { return v ? json(*v) : json(nullptr); }

json report_json(const lab::RingReport& r) {
    return {{"m", r.m},
            {"trinil_clean", r.is_trinil_clean},
            {"strongly_2_nil_clean", r.is_strongly_2_nil_clean},
            {"tripotent_ring", r.is_tripotent_ring},
            {"two_boolean", r.is_2_boolean},
            {"bounded_index_exponent", optional_json(r.bounded_index_exponent)},
            {"witness",
             {{"trinil_clean", optional_json(r.trinil_witness)},
              {"strongly_2_nil_clean", optional_json(r.strongly_2_nil_clean_witness)},
              {"tripotent_ring", optional_json(r.tripotent_witness)},
              {"two_boolean", optional_json(r.two_boolean_witness)}}}};
}

void print_report(std::ostream& out, const lab::RingReport& r) {
    const auto line = [&](const char* name, bool value, const std::optional<std::uint64_t>& witness) {
        out << std::left << std::setw(22) << name << (value ? "true" : "false");
        if (witness) out << " (witness " << *witness << ')';
        out << '\n';
    };
    out << "m = " << r.m << '\n';
    line("trinil_clean:", r.is_trinil_clean, r.trinil_witness);
    line("strongly_2_nil_clean:", r.is_strongly_2_nil_clean, r.strongly_2_nil_clean_witness);
    line("tripotent_ring:", r.is_tripotent_ring, r.tripotent_witness);
    line("two_boolean:", r.is_2_boolean, r.two_boolean_witness);
    out << std::setw(22) << "bounded_index:";
    if (r.bounded_index_exponent) {
        out << *r.bounded_index_exponent << '\n';
    } else {
        out << "none\n";
    }
}

struct DecomposeArgs {
    std::string input;
    std::optional<std::uint64_t> mod;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultFallbackBudget;
    std::string format = "json";
};

int cmd_decompose(const DecomposeArgs& a, Streams io) {
    return guarded(io, [&] {
        const MatZ m = read_matrix(slurp(a.input, io.in), a.mod);
        const TrinilCertificate cert = decompose(m, a.seed, a.budget);
        io.out << (a.format == "text" ? write_certificate_text(cert) : write_certificate_json(cert));
        return kExitOk;
    });
}

int cmd_verify(const std::string& path, Streams io) {
    return guarded(io, [&] {
        const TrinilCertificate cert = read_certificate(slurp(path, io.in));
        const Verification v = verify(cert);
        if (v.ok) {
            io.out << "ok\n";
            return kExitOk;
        }
        io.out << "verification failed: " << v.failure << '\n';
        return kExitVerificationFailed;
    });
}

int cmd_classify(std::optional<std::uint64_t> mod, std::optional<std::uint64_t> sweep, bool as_json, Streams io) {
    return guarded(io, [&] {
        if (mod) {
            const auto r = lab::classify_zm(*mod);
            if (as_json) {
                io.out << report_json(r).dump(2) << '\n';
            } else {
                print_report(io.out, r);
            }
            return kExitOk;
        }
        const auto rows = lab::modulus_admissibility_sweep(*sweep);
        std::size_t mismatches = 0;
        for (const auto& row : rows) mismatches += row.agrees() ? 0 : 1;
        if (as_json) {
            json table = json::array();
            for (const auto& row : rows) {
                table.push_back({{"m", row.m}, {"trinil_clean", row.trinil_clean},
                                 {"only_primes_2_3", row.only_primes_2_3}, {"agrees", row.agrees()}});
            }
            io.out << json{{"limit", *sweep}, {"rows", table}, {"mismatches", mismatches}}.dump(2) << '\n';
        } else {
            io.out << std::right << std::setw(6) << "m" << "  trinil_clean  2^a3^b  agrees\n";
            for (const auto& row : rows) {
                io.out << std::setw(6) << row.m << "  " << std::left << std::setw(11)
                       << (row.trinil_clean ? "true" : "false") << "  " << std::setw(6)
                       << (row.only_primes_2_3 ? "true" : "false") << "  " << (row.agrees() ? "yes" : "NO")
                       << std::right << '\n';
            }
            io.out << "mismatches: " << mismatches << '\n';
        }
        return kExitOk;
    });
}

int cmd_reproduce(bool as_json, bool inject_fault, Streams io) {
    return guarded(io, [&] {
        const auto results = lab::reproduction_checks(inject_fault);
        bool all = true;
        json items = json::array();
        for (const auto& r : results) {
            all = all && r.passed;
            if (as_json) {
                items.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
            } else {
                io.out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
            }
        }
        if (as_json) io.out << json{{"checks", items}, {"all_passed", all}}.dump(2) << '\n';
        return all ? kExitOk : kExitVerificationFailed;
    });
}

}  // namespace

int run(const std::vector<std::string>& args, Streams io) {
    std::uint64_t env_seed = 0;
    if (const char* s = std::getenv(kSeedEnv); s != nullptr && *s != '\0') {
        try {
            std::size_t used = 0;
            env_seed = std::stoull(s, &used);
            if (s[used] != '\0') throw std::invalid_argument(s);
        } catch (const std::exception&) {
            io.err << "parse error: " << kSeedEnv << " is not an unsigned integer\n";
            return kExitParseError;
        }
    }

    CLI::App app{"Tripotent + nilpotent matrix decompositions over Z/mZ, m = 2^k 3^l"};
    app.name("trinil");
    app.require_subcommand(1);

    DecomposeArgs dec;
    dec.seed = env_seed;
    auto* decompose_cmd = app.add_subcommand("decompose", "Decompose a matrix and print its certificate");
    decompose_cmd->add_option("input", dec.input, "Matrix file (text or JSON); stdin when omitted or '-'");
    decompose_cmd->add_option("--mod", dec.mod, "Modulus, overriding the document header");
    decompose_cmd->add_option("--seed", dec.seed, std::string("Seed for the GF(2) fallback (default $") + kSeedEnv + " or 0)");
    decompose_cmd->add_option("--budget", dec.budget, "Fallback sample budget per block")->capture_default_str();
    decompose_cmd->add_option("--format", dec.format, "Certificate format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    std::string cert_path;
    auto* verify_cmd = app.add_subcommand("verify", "Re-check a certificate from scratch");
    verify_cmd->add_option("certificate", cert_path, "Certificate file; stdin when omitted or '-'");

    std::optional<std::uint64_t> classify_mod;
    std::optional<std::uint64_t> classify_sweep;
    bool classify_json = false;
    auto* classify_cmd = app.add_subcommand("classify", "Classify Z/mZ or sweep the modulus law");
    auto* mod_opt = classify_cmd->add_option("--mod", classify_mod, "Single modulus (2..2^20)");
    auto* sweep_opt = classify_cmd->add_option("--sweep", classify_sweep, "Sweep 2..limit (limit <= 10^4)");
    mod_opt->excludes(sweep_opt);
    classify_cmd->add_flag("--json", classify_json, "Machine-readable output");

    bool repro_json = false;
    bool repro_fault = false;
    auto* repro_cmd = app.add_subcommand("reproduce", "Run the packaged reproductions");
    repro_cmd->add_flag("--json", repro_json, "Machine-readable output");
    repro_cmd->add_flag("--inject-fault", repro_fault, "Corrupt the refuter's claimed inverse (harness check)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (classify_cmd->parsed() && !classify_mod && !classify_sweep) {
            throw CLI::RequiredError("--mod or --sweep");
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, io.out, io.err);
        return code == 0 ? kExitOk : kExitParseError;
    }

    if (decompose_cmd->parsed()) return cmd_decompose(dec, io);
    if (verify_cmd->parsed()) return cmd_verify(cert_path, io);
    if (classify_cmd->parsed()) return cmd_classify(classify_mod, classify_sweep, classify_json, io);
    return cmd_reproduce(repro_json, repro_fault, io);
}

}  // namespace trinil::cli
