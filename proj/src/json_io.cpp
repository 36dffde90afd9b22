#include "fewform/json_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace fewform {

using nlohmann::json;

namespace {

// nlohmann reports a byte offset; turn it into line/column for the message
std::string locate(const std::string& text, size_t byte) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') ++line, col = 1;
        else ++col;
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_checked(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError("json parse error at " + locate(text, e.byte) + ": " + e.what());
    }
}

}  // namespace

BinaryForm form_from_json_text(const std::string& text) {
    json j = parse_checked(text);
    if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs"))
        throw DomainError("form json: expected {\"degree\": d, \"coeffs\": [...]}");
    if (!j["degree"].is_number_integer()) throw DomainError("form json: degree must be an integer");
    int d = j["degree"].get<int>();
    if (!j["coeffs"].is_array()) throw DomainError("form json: coeffs must be an array");
    std::vector<Rat> coeffs;
    for (const auto& c : j["coeffs"]) {
        if (c.is_string()) coeffs.push_back(parse_rational(c.get<std::string>()));
        else if (c.is_number_integer()) coeffs.push_back(Rat(c.get<long>()));
        else throw DomainError("form json: coefficients must be \"p/q\" strings");
    }
    if (static_cast<int>(coeffs.size()) != d + 1)
        throw DomainError("form json: expected " + std::to_string(d + 1) + " coefficients");
    return BinaryForm(d, std::move(coeffs));
}

std::string form_to_json_text(const BinaryForm& f) {
    json j;
    j["degree"] = f.degree();
    json arr = json::array();
    for (const Rat& c : f.coeffs()) arr.push_back(rat_to_string(c));
    j["coeffs"] = arr;
    return j.dump();
}

FewnomialFamily family_from_json_text(const std::string& text) {
    json j = parse_checked(text);
    if (!j.is_object() || !j.contains("r") || !j.contains("blocks"))
        throw DomainError("family json: expected {\"r\": r, \"blocks\": {...}}");
    FewnomialFamily fam;
    if (!j["r"].is_number_integer()) throw DomainError("family json: r must be an integer");
    fam.r = j["r"].get<int>();
    if (!j["blocks"].is_object()) throw DomainError("family json: blocks must be an object");
    for (const auto& [key, tuples] : j["blocks"].items()) {
        int k;
        try {
            k = std::stoi(key);
        } catch (const std::exception&) {
            throw DomainError("family json: block key '" + key + "' is not an integer");
        }
        if (!tuples.is_array()) throw DomainError("family json: block tuples must be arrays");
        for (const auto& t : tuples) {
            std::vector<Int> tuple;
            for (const auto& a : t) {
                if (a.is_string()) tuple.push_back(Int(a.get<std::string>()));
                else if (a.is_number_integer()) tuple.push_back(Int(a.get<long>()));
                else throw DomainError("family json: tuple entries must be integers");
            }
            fam.blocks[k].push_back(std::move(tuple));
        }
    }
    fam.validate();
    return fam;
}

std::string family_to_json_text(const FewnomialFamily& fam) {
    json blocks = json::object();
    for (const auto& [k, tuples] : fam.blocks) {
        json arr = json::array();
        for (const auto& t : tuples) {
            json row = json::array();
            for (const Int& a : t) row.push_back(a.get_str());
            arr.push_back(row);
        }
        blocks[std::to_string(k)] = arr;
    }
    json j;
    j["r"] = fam.r;
    j["blocks"] = blocks;
    return j.dump();
}

std::string load_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

BinaryForm form_from_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return form_from_json_text(arg);
    return form_from_json_text(load_text_file(arg));
}

FewnomialFamily family_from_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return family_from_json_text(arg);
    return family_from_json_text(load_text_file(arg));
}

}  // namespace fewform
