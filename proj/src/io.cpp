#include "epchar/io.hpp"

#include <fstream>
#include <sstream>

#include "epchar/errors.hpp"

namespace epchar {

using nlohmann::ordered_json;

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Rational rational_from_json(const ordered_json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Int(j.get<std::int64_t>()));
    fail(errc::validation_error, "expected an exact rational (integer or \"p/q\" string)");
}

// rationals with denominator 1 render as numbers, the rest as "p/q"
ordered_json rational_to_json(const Rational& r) {
    if (denominator(r) == 1 && numerator(r) >= std::numeric_limits<std::int64_t>::min() &&
        numerator(r) <= std::numeric_limits<std::int64_t>::max())
        return numerator(r).convert_to<std::int64_t>();
    return rational_str(r);
}

}  // namespace

DatumFile parse_datum_file(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        fail(errc::parse_error,
             "line " + std::to_string(line) + ", column " + std::to_string(col));
    }

    try {
        DatumFile f;
        f.name = j.at("name").get<std::string>();
        f.rank = j.at("rank").get<int>();
        for (const auto& rj : j.at("positive_roots")) {
            DatumFile::Root root;
            for (const auto& c : rj.at("coords")) root.coords.push_back(rational_from_json(c));
            root.cls = rj.at("class").get<std::string>();
            f.positive_roots.push_back(std::move(root));
        }
        for (const auto& row : j.at("gram")) {
            std::vector<Rational> r;
            for (const auto& c : row) r.push_back(rational_from_json(c));
            f.gram.push_back(std::move(r));
        }
        if (j.contains("extra_weyl_generators")) {
            for (const auto& gj : j.at("extra_weyl_generators")) {
                std::vector<std::vector<std::int64_t>> mat;
                for (const auto& row : gj) mat.push_back(row.get<std::vector<std::int64_t>>());
                f.extra_weyl_generators.push_back(std::move(mat));
            }
        }
        return f;
    } catch (const calc_error&) {
        throw;
    } catch (const std::exception& e) {
        fail(errc::validation_error, e.what());
    }
}

std::string serialize_datum_file(const DatumFile& f) {
    ordered_json j;
    j["name"] = f.name;
    j["rank"] = f.rank;
    j["positive_roots"] = ordered_json::array();
    for (const auto& r : f.positive_roots) {
        ordered_json rj;
        rj["coords"] = ordered_json::array();
        for (const auto& c : r.coords) rj["coords"].push_back(rational_to_json(c));
        rj["class"] = r.cls;
        j["positive_roots"].push_back(rj);
    }
    j["gram"] = ordered_json::array();
    for (const auto& row : f.gram) {
        ordered_json rj = ordered_json::array();
        for (const auto& c : row) rj.push_back(rational_to_json(c));
        j["gram"].push_back(rj);
    }
    if (!f.extra_weyl_generators.empty()) j["extra_weyl_generators"] = f.extra_weyl_generators;
    return j.dump(2) + "\n";
}

CartanDatum datum_from_file(const DatumFile& f) {
    RawCartanDatum raw;
    raw.name = f.name;
    raw.rank = f.rank;
    for (const auto& r : f.positive_roots) {
        raw.positive_roots.push_back(weight_from_true(r.coords));
        raw.root_class.push_back(root_class_from_name(r.cls));
    }
    if (f.gram.size() != static_cast<std::size_t>(f.rank))
        fail(errc::gram_not_symmetric, "gram matrix must be rank x rank");
    raw.gram = RationalMatrix(f.rank, f.rank);
    for (int i = 0; i < f.rank; ++i) {
        if (f.gram[i].size() != static_cast<std::size_t>(f.rank))
            fail(errc::gram_not_symmetric, "gram matrix must be rank x rank");
        for (int j = 0; j < f.rank; ++j)
            raw.gram(i, j) = f.gram[i][j] / 4;  // true-coordinate form on doubled coordinates
    }
    for (const auto& g : f.extra_weyl_generators) {
        Mat<std::int64_t> m(f.rank, f.rank);
        if (g.size() != static_cast<std::size_t>(f.rank))
            fail(errc::validation_error, "extra generator must be rank x rank");
        for (int i = 0; i < f.rank; ++i) {
            if (g[i].size() != static_cast<std::size_t>(f.rank))
                fail(errc::validation_error, "extra generator must be rank x rank");
            for (int j = 0; j < f.rank; ++j) m(i, j) = g[i][j];
        }
        raw.extra_weyl_generators.push_back(m);
    }
    return build_cartan_datum(raw);
}

DatumFile file_from_datum(const CartanDatum& d) {
    DatumFile f;
    f.name = d.name;
    f.rank = d.rank;
    for (std::size_t i = 0; i < d.positive_roots.size(); ++i) {
        DatumFile::Root r;
        r.coords = weight_to_true(d.positive_roots[i]);
        r.cls = root_class_name(d.root_class[i]);
        f.positive_roots.push_back(std::move(r));
    }
    f.gram.assign(d.rank, std::vector<Rational>(d.rank));
    for (int i = 0; i < d.rank; ++i)
        for (int j = 0; j < d.rank; ++j) f.gram[i][j] = d.gram(i, j) * 4;
    for (const auto& g : d.extra_weyl_generators) {
        std::vector<std::vector<std::int64_t>> m(d.rank, std::vector<std::int64_t>(d.rank));
        for (int i = 0; i < d.rank; ++i)
            for (int j = 0; j < d.rank; ++j) m[i][j] = g.matrix(i, j);
        f.extra_weyl_generators.push_back(std::move(m));
    }
    return f;
}

CartanDatum parse_datum(const std::string& text) { return datum_from_file(parse_datum_file(text)); }

CartanDatum load_datum(const std::string& path) { return parse_datum(read_file(path)); }

// ---- bundled data ------------------------------------------------------

namespace {

DatumFile make_builtin(const std::string& name) {
    DatumFile f;
    f.name = name;
    auto root = [](std::vector<Rational> c, const char* cls) {
        return DatumFile::Root{std::move(c), cls};
    };
    if (name == "sl2R") {
        f.rank = 1;
        f.positive_roots = {root({Rational(2)}, "noncompact")};
        f.gram = {{Rational(1, 2)}};
    } else if (name == "su2") {
        f.rank = 1;
        f.positive_roots = {root({Rational(2)}, "compact")};
        f.gram = {{Rational(1, 2)}};
    } else if (name == "su3") {
        f.rank = 2;
        f.positive_roots = {root({Rational(2), Rational(-1)}, "compact"),
                            root({Rational(-1), Rational(2)}, "compact"),
                            root({Rational(1), Rational(1)}, "compact")};
        f.gram = {{Rational(2, 3), Rational(1, 3)}, {Rational(1, 3), Rational(2, 3)}};
    } else if (name == "sp4R") {
        f.rank = 2;
        f.positive_roots = {root({Rational(1), Rational(-1)}, "compact"),
                            root({Rational(2), Rational(0)}, "noncompact"),
                            root({Rational(1), Rational(1)}, "noncompact"),
                            root({Rational(0), Rational(2)}, "noncompact")};
        f.gram = {{Rational(1, 2), Rational(0)}, {Rational(0), Rational(1, 2)}};
    } else {
        fail(errc::validation_error, "no bundled datum named '" + name + "'");
    }
    return f;
}

}  // namespace

std::vector<std::string> builtin_datum_names() { return {"sl2R", "su2", "su3", "sp4R"}; }

std::string builtin_datum_json(const std::string& name) {
    return serialize_datum_file(make_builtin(name));
}

CartanDatum builtin_datum(const std::string& name) {
    return datum_from_file(make_builtin(name));
}

// ---- reports ------------------------------------------------------------

void Report::add(const std::string& name, ordered_json value) {
    results.emplace_back(name, std::move(value));
}

void Report::assert_that(const std::string& name, bool pass) {
    assertions.emplace_back(name, pass);
}

bool Report::pass() const {
    for (const auto& [n, p] : assertions)
        if (!p) return false;
    return true;
}

nlohmann::ordered_json json_int(const Int& v) { return v.str(); }

nlohmann::ordered_json json_rational(const Rational& v) { return rational_str(v); }

namespace {

ordered_json coord_json(std::int64_t doubled) {
    if (doubled % 2 == 0) return doubled / 2;
    return std::to_string(doubled) + "/2";
}

}  // namespace

nlohmann::ordered_json json_weight(const Weight& w) {
    ordered_json a = ordered_json::array();
    for (auto c : w.coords) a.push_back(coord_json(c));
    return a;
}

nlohmann::ordered_json json_character(const VirtualCharacter& c) {
    ordered_json a = ordered_json::array();
    // descending lexicographic support order, highest weight first
    for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
        ordered_json term = ordered_json::array();
        term.push_back(json_weight(it->first));
        const Int& m = it->second;
        if (m >= std::numeric_limits<std::int64_t>::min() &&
            m <= std::numeric_limits<std::int64_t>::max())
            term.push_back(m.convert_to<std::int64_t>());
        else
            term.push_back(m.str());
        a.push_back(std::move(term));
    }
    return a;
}

nlohmann::ordered_json json_complex(const std::complex<double>& z) {
    return ordered_json::array({z.real(), z.imag()});
}

std::string emit_report(const Report& r, ReportFormat fmt) {
    if (fmt == ReportFormat::json) {
        ordered_json j;
        j["command"] = r.command;
        j["inputs"] = r.inputs_digest;
        j["results"] = ordered_json::array();
        for (const auto& [name, value] : r.results)
            j["results"].push_back(ordered_json{{"name", name}, {"value", value}});
        j["assertions"] = ordered_json::array();
        for (const auto& [name, pass] : r.assertions)
            j["assertions"].push_back(ordered_json{{"name", name}, {"pass", pass}});
        j["pass"] = r.pass();
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "command\t" << r.command << "\n";
    out << "inputs\t" << r.inputs_digest << "\n";
    for (const auto& [name, value] : r.results) {
        out << name << "\t";
        if (value.is_string())
            out << value.get<std::string>();
        else
            out << value.dump();
        out << "\n";
    }
    for (const auto& [name, pass] : r.assertions)
        out << "assert:" << name << "\t" << (pass ? "pass" : "fail") << "\n";
    out << "pass\t" << (r.pass() ? "true" : "false") << "\n";
    return out.str();
}

}  // namespace epchar
