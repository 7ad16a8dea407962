#include "document.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace trinil::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxDimension = 4096;

bool looks_like_json(const std::string& s) {
    const auto pos = s.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && s[pos] == '{';
}

std::int64_t parse_int(const std::string& token) {
    std::int64_t v = 0;
    const char* first = token.data();
    const char* last = first + token.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) throw ParseError("not an integer: '" + token + "'");
    return v;
}

std::uint64_t parse_count(const std::string& token, const char* what) {
    const std::int64_t v = parse_int(token);
    if (v < 0) throw ParseError(std::string(what) + " must be non-negative");
    return static_cast<std::uint64_t>(v);
}

Modulus make_modulus(std::uint64_t m) {
    if (m < 2 || m > kMaxModulus) throw ParseError("modulus " + std::to_string(m) + " out of range");
    return Modulus::make(m);
}

std::size_t check_dimension(std::uint64_t n) {
    if (n < 1 || n > kMaxDimension) throw ParseError("dimension " + std::to_string(n) + " out of range");
    return static_cast<std::size_t>(n);
}

class Tokens {
public:
    explicit Tokens(const std::string& s) {
        std::istringstream in(s);
        for (std::string t; in >> t;) tokens_.push_back(std::move(t));
    }
    bool done() const { return pos_ == tokens_.size(); }
    const std::string& next(const char* what) {
        if (done()) throw ParseError(std::string("unexpected end of input, expected ") + what);
        return tokens_[pos_++];
    }
    void expect(const std::string& word) {
        const auto& t = next(word.c_str());
        if (t != word) throw ParseError("expected '" + word + "', found '" + t + "'");
    }
    std::size_t remaining() const { return tokens_.size() - pos_; }

private:
    std::vector<std::string> tokens_;
    std::size_t pos_ = 0;
};

std::vector<std::int64_t> read_entries(Tokens& tok, std::size_t count) {
    std::vector<std::int64_t> v(count);
    for (auto& x : v) x = parse_int(tok.next("matrix entry"));
    return v;
}

MatZ matrix_from_json(const json& entries, std::size_t n, const Modulus& mod) {
    if (!entries.is_array()) throw ParseError("entries must be an array");
    if (entries.size() != n * n) {
        throw ParseError("expected " + std::to_string(n * n) + " entries, found " + std::to_string(entries.size()));
    }
    std::vector<std::int64_t> v;
    v.reserve(entries.size());
    for (const auto& e : entries) {
        if (!e.is_number_integer()) throw ParseError("entries must be integers");
        v.push_back(e.get<std::int64_t>());
    }
    return MatZ::from_entries(n, mod, v);
}

MatGF residue_from_entries(std::span<const std::int64_t> v, std::size_t n, std::uint8_t p) {
    std::vector<std::uint8_t> r;
    r.reserve(v.size());
    for (auto x : v) {
        if (x < 0 || x >= p) throw ParseError("residue entry outside [0, " + std::to_string(p) + ")");
        r.push_back(static_cast<std::uint8_t>(x));
    }
    return MatGF::from_entries(n, p, r);
}

json flat(const MatZ& a) { return json(std::vector<std::uint32_t>(a.entries().begin(), a.entries().end())); }
json flat(const MatGF& a) { return json(std::vector<unsigned>(a.entries().begin(), a.entries().end())); }

template <class Mat>
void write_rows(std::ostream& out, const Mat& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) out << (j ? " " : "") << static_cast<unsigned>(a(i, j));
        out << '\n';
    }
}

TrinilCertificate certificate_from_json(const std::string& source) {
    json doc;
    try {
        doc = json::parse(source);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    try {
        if (doc.value("format", "") != "trinil-certificate") throw ParseError("not a trinil certificate");
        const Modulus mod = make_modulus(doc.at("m").get<std::uint64_t>());
        const std::size_t n = check_dimension(doc.at("n").get<std::uint64_t>());
        TrinilCertificate cert{matrix_from_json(doc.at("A"), n, mod),
                               matrix_from_json(doc.at("E"), n, mod),
                               matrix_from_json(doc.at("W"), n, mod),
                               doc.at("nilpotency_exponent").get<std::uint64_t>(),
                               {},
                               doc.at("provenance").get<std::vector<std::string>>(),
                               doc.at("seed").get<std::uint64_t>(),
                               std::nullopt,
                               std::nullopt};
        const auto& c = doc.at("checks");
        cert.checks = {c.at("sum_ok").get<bool>(), c.at("tripotent_ok").get<bool>(),
                       c.at("nilpotent_ok").get<bool>(), c.at("residue_traceability").get<bool>()};
        for (auto [key, p] : {std::pair{"residue_e2", 2}, std::pair{"residue_e3", 3}}) {
            const auto& r = doc.at(key);
            if (r.is_null()) continue;
            if (!r.is_array() || r.size() != n * n) throw ParseError(std::string(key) + " has the wrong shape");
            const auto v = r.get<std::vector<std::int64_t>>();
            (p == 2 ? cert.residue_e2 : cert.residue_e3) = residue_from_entries(v, n, static_cast<std::uint8_t>(p));
        }
        return cert;
    } catch (const json::exception& e) {
        throw ParseError(std::string("certificate field error: ") + e.what());
    }
}

TrinilCertificate certificate_from_text(const std::string& source) {
    Tokens tok(source);
    tok.expect("trinil-certificate");
    if (parse_int(tok.next("version")) != 1) throw ParseError("unsupported certificate version");
    tok.expect("mod");
    const Modulus mod = make_modulus(parse_count(tok.next("modulus"), "modulus"));
    tok.expect("n");
    const std::size_t n = check_dimension(parse_count(tok.next("dimension"), "dimension"));
    tok.expect("seed");
    const std::uint64_t seed = parse_count(tok.next("seed"), "seed");
    tok.expect("exponent");
    const std::uint64_t exponent = parse_count(tok.next("exponent"), "exponent");
    tok.expect("provenance");
    const std::uint64_t count = parse_count(tok.next("provenance count"), "provenance count");
    if (count > tok.remaining()) throw ParseError("provenance list truncated");
    std::vector<std::string> provenance;
    for (std::uint64_t i = 0; i < count; ++i) provenance.push_back(tok.next("provenance entry"));

    CertificateChecks checks;
    tok.expect("checks");
    for (auto [name, flag] : {std::pair{"sum_ok", &checks.sum_ok}, std::pair{"tripotent_ok", &checks.tripotent_ok},
                              std::pair{"nilpotent_ok", &checks.nilpotent_ok},
                              std::pair{"residue_traceability", &checks.residue_ok}}) {
        tok.expect(name);
        *flag = parse_int(tok.next(name)) != 0;
    }

    const auto section = [&](const char* name) {
        tok.expect(name);
        return MatZ::from_entries(n, mod, read_entries(tok, n * n));
    };
    MatZ a = section("A");
    MatZ e = section("E");
    MatZ w = section("W");
    TrinilCertificate cert{std::move(a), std::move(e), std::move(w), exponent, checks, std::move(provenance),
                           seed, std::nullopt, std::nullopt};
    while (!tok.done()) {
        const std::string key = tok.next("residue section");
        if (key != "E2" && key != "E3") throw ParseError("unknown section '" + key + "'");
        const auto v = read_entries(tok, n * n);
        if (key == "E2") {
            cert.residue_e2 = residue_from_entries(v, n, 2);
        } else {
            cert.residue_e3 = residue_from_entries(v, n, 3);
        }
    }
    return cert;
}

}  // namespace

MatZ read_matrix(const std::string& source, std::optional<std::uint64_t> mod_override) {
    if (looks_like_json(source)) {
        json doc;
        try {
            doc = json::parse(source);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("malformed JSON: ") + e.what());
        }
        try {
            std::uint64_t m = 0;
            if (mod_override) {
                m = *mod_override;
            } else {
                m = doc.at("m").get<std::uint64_t>();
            }
            const std::size_t n = check_dimension(doc.at("n").get<std::uint64_t>());
            return matrix_from_json(doc.at("entries"), n, make_modulus(m));
        } catch (const json::exception& e) {
            throw ParseError(std::string("matrix field error: ") + e.what());
        }
    }

    Tokens tok(source);
    std::optional<std::uint64_t> m;
    std::optional<std::size_t> n;
    while (!n) {
        const std::string key = tok.next("header");
        if (key == "mod") {
            m = parse_count(tok.next("modulus"), "modulus");
        } else if (key == "n") {
            n = check_dimension(parse_count(tok.next("dimension"), "dimension"));
        } else {
            throw ParseError("unknown header field '" + key + "'");
        }
    }
    if (mod_override) m = mod_override;
    if (!m) throw ParseError("no modulus given (header 'mod <m>' or --mod)");
    if (tok.remaining() != *n * *n) {
        throw ParseError("expected " + std::to_string(*n * *n) + " entries, found " + std::to_string(tok.remaining()));
    }
    return MatZ::from_entries(*n, make_modulus(*m), read_entries(tok, *n * *n));
}

std::string write_certificate_json(const TrinilCertificate& cert) {
    json doc;
    doc["format"] = "trinil-certificate";
    doc["version"] = 1;
    doc["m"] = cert.a.modulus().m();
    doc["n"] = cert.a.size();
    doc["seed"] = cert.seed;
    doc["nilpotency_exponent"] = cert.nilpotency_exponent;
    doc["provenance"] = cert.provenance;
    doc["checks"] = {{"sum_ok", cert.checks.sum_ok},
                     {"tripotent_ok", cert.checks.tripotent_ok},
                     {"nilpotent_ok", cert.checks.nilpotent_ok},
                     {"residue_traceability", cert.checks.residue_ok}};
    doc["A"] = flat(cert.a);
    doc["E"] = flat(cert.e);
    doc["W"] = flat(cert.w);
    doc["residue_e2"] = cert.residue_e2 ? flat(*cert.residue_e2) : json(nullptr);
    doc["residue_e3"] = cert.residue_e3 ? flat(*cert.residue_e3) : json(nullptr);
    return doc.dump(2) + "\n";
}

std::string write_certificate_text(const TrinilCertificate& cert) {
    std::ostringstream out;
    out << "trinil-certificate 1\n";
    out << "mod " << cert.a.modulus().m() << " n " << cert.a.size() << '\n';
    out << "seed " << cert.seed << '\n';
    out << "exponent " << cert.nilpotency_exponent << '\n';
    out << "provenance " << cert.provenance.size();
    for (const auto& p : cert.provenance) out << ' ' << p;
    out << '\n';
    out << "checks sum_ok " << cert.checks.sum_ok << " tripotent_ok " << cert.checks.tripotent_ok
        << " nilpotent_ok " << cert.checks.nilpotent_ok << " residue_traceability " << cert.checks.residue_ok
        << '\n';
    out << "A\n";
    write_rows(out, cert.a);
    out << "E\n";
    write_rows(out, cert.e);
    out << "W\n";
    write_rows(out, cert.w);
    if (cert.residue_e2) {
        out << "E2\n";
        write_rows(out, *cert.residue_e2);
    }
    if (cert.residue_e3) {
        out << "E3\n";
        write_rows(out, *cert.residue_e3);
    }
    return out.str();
}

TrinilCertificate read_certificate(const std::string& source) {
    return looks_like_json(source) ? certificate_from_json(source) : certificate_from_text(source);
}

}  // namespace trinil::cli
