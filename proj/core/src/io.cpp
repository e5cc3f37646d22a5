#include "hermitrig/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hermitrig {

namespace {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error(path + ": cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw io_error(path + ": cannot open file for writing");
    }
    out << text;
    if (!out) {
        throw io_error(path + ": write failed");
    }
}

json parse_json(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& err) {
        throw io_error(origin + ": " + err.what());
    }
}

int require_int(const json& doc, const std::string& origin, const std::string& field) {
    if (!doc.contains(field) || !doc[field].is_number_integer()) {
        throw io_error(origin + ": missing or non-integer field \"" + field + "\"");
    }
    return doc[field].get<int>();
}

double require_number(const json& doc, const std::string& origin, const std::string& field) {
    if (!doc.contains(field) || !doc[field].is_number()) {
        throw io_error(origin + ": missing or non-numeric field \"" + field + "\"");
    }
    return doc[field].get<double>();
}

GridSpec grid_from_json(const json& doc, const std::string& origin) {
    const int family = require_int(doc, origin, "family");
    if (family != 0 && family != 1) {
        throw io_error(origin + ": family must be 0 or 1");
    }
    int n = 0;
    if (doc.contains("n")) {
        n = require_int(doc, origin, "n");
        if (doc.contains("N")) {
            const int N = require_int(doc, origin, "N");
            if (N != 2 * n + 1) {
                throw io_error(origin + ": N = " + std::to_string(N) +
                               " is inconsistent with n = " + std::to_string(n));
            }
        }
    } else if (doc.contains("N")) {
        const int N = require_int(doc, origin, "N");
        if (N % 2 == 0) {
            throw io_error(origin + ": N must be odd (N = 2n+1)");
        }
        n = (N - 1) / 2;
    } else {
        throw io_error(origin + ": missing grid size field \"n\" (or \"N\")");
    }
    if (n < 1) {
        throw io_error(origin + ": n must be >= 1");
    }
    return make_grid(family, n);
}

json doc_for(const std::string& text, const std::string& origin,
             const std::string& expected_format) {
    json doc = parse_json(text, origin);
    if (!doc.is_object()) {
        throw io_error(origin + ": top-level value must be a JSON object");
    }
    if (doc.contains("format") && doc["format"].is_string()) {
        const std::string fmt = doc["format"].get<std::string>();
        if (fmt != expected_format) {
            throw io_error(origin + ": unexpected format \"" + fmt + "\", want \"" +
                           expected_format + "\"");
        }
    }
    return doc;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string mode_name(BuildMode mode) {
    return mode == BuildMode::strict_centered ? "strict" : "paper";
}

BuildMode mode_from_name(const std::string& s) {
    if (s == "strict") {
        return BuildMode::strict_centered;
    }
    if (s == "paper") {
        return BuildMode::paper_H_terms;
    }
    throw io_error("unknown mode \"" + s + "\" (want \"strict\" or \"paper\")");
}

SampleFile parse_sample_text(const std::string& text, const std::string& origin) {
    const json doc = doc_for(text, origin, "hermitrig-samples/1");

    SampleFile file;
    file.samples.grid = grid_from_json(doc, origin);
    file.samples.p = require_int(doc, origin, "p");
    if (file.samples.p < 0) {
        throw io_error(origin + ": p must be >= 0");
    }
    if (doc.contains("mode")) {
        if (!doc["mode"].is_string()) {
            throw io_error(origin + ": field \"mode\" must be a string");
        }
        file.mode = mode_from_name(doc["mode"].get<std::string>());
        file.has_mode = true;
    }
    if (!doc.contains("rows") || !doc["rows"].is_array()) {
        throw io_error(origin + ": missing array field \"rows\"");
    }
    const json& rows = doc["rows"];
    if (rows.size() != static_cast<std::size_t>(file.samples.p) + 1) {
        throw io_error(origin + ": expected " + std::to_string(file.samples.p + 1) +
                       " rows (orders 0.." + std::to_string(file.samples.p) + "), got " +
                       std::to_string(rows.size()));
    }
    file.samples.rows.reserve(rows.size());
    for (std::size_t m = 0; m < rows.size(); ++m) {
        if (!rows[m].is_array()) {
            throw io_error(origin + ": rows[" + std::to_string(m) + "] must be an array");
        }
        if (rows[m].size() != static_cast<std::size_t>(file.samples.grid.N)) {
            throw io_error(origin + ": rows[" + std::to_string(m) + "] has " +
                           std::to_string(rows[m].size()) + " entries, expected N = " +
                           std::to_string(file.samples.grid.N));
        }
        std::vector<double> row;
        row.reserve(rows[m].size());
        for (std::size_t j = 0; j < rows[m].size(); ++j) {
            if (!rows[m][j].is_number()) {
                throw io_error(origin + ": rows[" + std::to_string(m) + "][" +
                               std::to_string(j) + "] is not a number");
            }
            row.push_back(rows[m][j].get<double>());
        }
        file.samples.rows.push_back(std::move(row));
    }
    return file;
}

SampleFile read_sample_file(const std::string& path) {
    return parse_sample_text(read_text_file(path), path);
}

std::string sample_to_text(const SampleFile& file) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"format\": \"hermitrig-samples/1\",\n";
    out << "  \"family\": " << file.samples.grid.family << ",\n";
    out << "  \"n\": " << file.samples.grid.n << ",\n";
    out << "  \"p\": " << file.samples.p << ",\n";
    if (file.has_mode) {
        out << "  \"mode\": \"" << mode_name(file.mode) << "\",\n";
    }
    out << "  \"rows\": [\n";
    for (std::size_t m = 0; m < file.samples.rows.size(); ++m) {
        out << "    [";
        const std::vector<double>& row = file.samples.rows[m];
        for (std::size_t j = 0; j < row.size(); ++j) {
            out << (j == 0 ? "" : ", ") << format_double(row[j]);
        }
        out << "]" << (m + 1 < file.samples.rows.size() ? "," : "") << "\n";
    }
    out << "  ]\n";
    out << "}\n";
    return out.str();
}

void write_sample_file(const SampleFile& file, const std::string& path) {
    write_text_file(path, sample_to_text(file));
}

std::string poly_to_text(const HermiteTrigPoly& poly, BuildMode mode) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"format\": \"hermitrig-poly/1\",\n";
    out << "  \"family\": " << poly.grid.family << ",\n";
    out << "  \"n\": " << poly.grid.n << ",\n";
    out << "  \"p\": " << poly.p << ",\n";
    out << "  \"mode\": \"" << mode_name(mode) << "\",\n";
    out << "  \"const_term\": " << format_double(poly.const_term) << ",\n";
    auto dump_coeffs = [&out](const std::map<int, double>& coeffs, const char* key,
                              bool trailing_comma) {
        out << "  \"" << key << "\": [";
        bool first = true;
        for (const auto& [omega, value] : coeffs) {
            out << (first ? "" : ", ") << "[" << omega << ", " << format_double(value) << "]";
            first = false;
        }
        out << "]" << (trailing_comma ? "," : "") << "\n";
    };
    dump_coeffs(poly.cos_coeffs, "cos", true);
    dump_coeffs(poly.sin_coeffs, "sin", true);
    out << "  \"mean_terms\": [";
    for (std::size_t m = 0; m < poly.mean_terms.size(); ++m) {
        out << (m == 0 ? "" : ", ") << format_double(poly.mean_terms[m]);
    }
    out << "]\n";
    out << "}\n";
    return out.str();
}

void write_poly_file(const HermiteTrigPoly& poly, BuildMode mode, const std::string& path) {
    write_text_file(path, poly_to_text(poly, mode));
}

PolyFile parse_poly_text(const std::string& text, const std::string& origin) {
    const json doc = doc_for(text, origin, "hermitrig-poly/1");

    PolyFile file;
    file.poly.grid = grid_from_json(doc, origin);
    file.poly.p = require_int(doc, origin, "p");
    if (file.poly.p < 0) {
        throw io_error(origin + ": p must be >= 0");
    }
    if (doc.contains("mode")) {
        if (!doc["mode"].is_string()) {
            throw io_error(origin + ": field \"mode\" must be a string");
        }
        file.mode = mode_from_name(doc["mode"].get<std::string>());
    }
    file.poly.const_term = require_number(doc, origin, "const_term");

    auto load_coeffs = [&doc, &origin](const std::string& key) {
        std::map<int, double> coeffs;
        if (!doc.contains(key) || !doc[key].is_array()) {
            throw io_error(origin + ": missing array field \"" + key + "\"");
        }
        for (std::size_t i = 0; i < doc[key].size(); ++i) {
            const json& pair = doc[key][i];
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
                !pair[1].is_number()) {
                throw io_error(origin + ": " + key + "[" + std::to_string(i) +
                               "] must be a [frequency, coefficient] pair");
            }
            const int omega = pair[0].get<int>();
            if (omega < 1) {
                throw io_error(origin + ": " + key + "[" + std::to_string(i) +
                               "] has non-positive frequency");
            }
            if (!coeffs.emplace(omega, pair[1].get<double>()).second) {
                throw io_error(origin + ": duplicate frequency " + std::to_string(omega) +
                               " in \"" + key + "\"");
            }
        }
        return coeffs;
    };
    file.poly.cos_coeffs = load_coeffs("cos");
    file.poly.sin_coeffs = load_coeffs("sin");

    if (!doc.contains("mean_terms") || !doc["mean_terms"].is_array()) {
        throw io_error(origin + ": missing array field \"mean_terms\"");
    }
    if (doc["mean_terms"].size() != static_cast<std::size_t>(file.poly.p) + 1) {
        throw io_error(origin + ": mean_terms must have p + 1 = " +
                       std::to_string(file.poly.p + 1) + " entries");
    }
    for (std::size_t m = 0; m < doc["mean_terms"].size(); ++m) {
        if (!doc["mean_terms"][m].is_number()) {
            throw io_error(origin + ": mean_terms[" + std::to_string(m) + "] is not a number");
        }
        file.poly.mean_terms.push_back(doc["mean_terms"][m].get<double>());
    }
    if (file.poly.mean_terms[0] != 0.0) {
        throw io_error(origin + ": mean_terms[0] must be 0 (the function mean lives in "
                                "const_term)");
    }
    return file;
}

PolyFile read_poly_file(const std::string& path) {
    return parse_poly_text(read_text_file(path), path);
}

std::vector<double> parse_points_spec(const std::string& spec) {
    auto parse_one = [&spec](const std::string& token, const char* what) {
        try {
            std::size_t used = 0;
            const double v = std::stod(token, &used);
            if (used != token.size() || !std::isfinite(v)) {
                throw std::invalid_argument("trailing characters");
            }
            return v;
        } catch (const std::exception&) {
            throw io_error("bad points spec \"" + spec + "\": cannot parse " + what + " \"" +
                           token + "\"");
        }
    };

    std::vector<std::string> parts;
    const bool is_range = spec.find(':') != std::string::npos;
    const char sep = is_range ? ':' : ',';
    std::string token;
    std::istringstream in(spec);
    while (std::getline(in, token, sep)) {
        parts.push_back(token);
    }

    if (is_range) {
        if (parts.size() != 3) {
            throw io_error("bad points spec \"" + spec + "\": want start:stop:count");
        }
        const double start = parse_one(parts[0], "start");
        const double stop = parse_one(parts[1], "stop");
        long count = 0;
        try {
            std::size_t used = 0;
            count = std::stol(parts[2], &used);
            if (used != parts[2].size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception&) {
            throw io_error("bad points spec \"" + spec + "\": cannot parse count \"" + parts[2] +
                           "\"");
        }
        if (count < 0) {
            throw io_error("bad points spec \"" + spec + "\": count must be >= 0");
        }
        std::vector<double> points;
        points.reserve(static_cast<std::size_t>(count));
        if (count == 1) {
            points.push_back(start);
        } else {
            for (long i = 0; i < count; ++i) {
                points.push_back(start + (stop - start) * static_cast<double>(i) /
                                             static_cast<double>(count - 1));
            }
        }
        return points;
    }

    std::vector<double> points;
    if (spec.empty()) {
        return points;
    }
    for (const std::string& part : parts) {
        points.push_back(parse_one(part, "value"));
    }
    return points;
}

}  // namespace hermitrig
