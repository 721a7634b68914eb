#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "epchar/cartan.hpp"
#include "epchar/epcore.hpp"

namespace epchar {

// On-disk description of a Cartan datum. Weights and the gram matrix are in
// TRUE coordinates (rationals, denominator at most 2); doubling is internal.
struct DatumFile {
    struct Root {
        std::vector<Rational> coords;
        std::string cls;
    };
    std::string name;
    int rank = 0;
    std::vector<Root> positive_roots;
    std::vector<std::vector<Rational>> gram;
    std::vector<std::vector<std::vector<std::int64_t>>> extra_weyl_generators;
};

// Throws ParseError with line/column on malformed JSON, ValidationError on
// schema violations (including denominators > 2).
DatumFile parse_datum_file(const std::string& text);
std::string serialize_datum_file(const DatumFile& f);

CartanDatum datum_from_file(const DatumFile& f);
DatumFile file_from_datum(const CartanDatum& d);

CartanDatum parse_datum(const std::string& text);
CartanDatum load_datum(const std::string& path);

// Bundled example data; the files under data/ carry exactly this content.
std::vector<std::string> builtin_datum_names();
std::string builtin_datum_json(const std::string& name);
CartanDatum builtin_datum(const std::string& name);

// ---- reports ----------------------------------------------------------

struct Report {
    std::string command;
    std::string inputs_digest;
    std::vector<std::pair<std::string, nlohmann::ordered_json>> results;
    std::vector<std::pair<std::string, bool>> assertions;

    void add(const std::string& name, nlohmann::ordered_json value);
    void assert_that(const std::string& name, bool pass);
    bool pass() const;
};

enum class ReportFormat { json, tsv };

std::string emit_report(const Report& r, ReportFormat fmt);

// value encoders shared by the CLI and tests
nlohmann::ordered_json json_int(const Int& v);
nlohmann::ordered_json json_rational(const Rational& v);
nlohmann::ordered_json json_weight(const Weight& w);              // true coordinates
nlohmann::ordered_json json_character(const VirtualCharacter& c); // sorted, descending
nlohmann::ordered_json json_complex(const std::complex<double>& z);

std::uint64_t fnv1a(const std::string& bytes);
std::string read_file(const std::string& path);

}  // namespace epchar
