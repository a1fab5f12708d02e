#include "shiftlab/spec_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace shiftlab {

namespace {

using nlohmann::json;

void require_keys(const json& j, const std::set<std::string>& allowed) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw input_error("unknown key in spec document: " + it.key());
}

GapSet parse_gaps_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "pow2")
            return GapSet::pow2();
        throw input_error("unknown gap set name: " + j.get<std::string>());
    }
    if (j.is_array()) {
        std::vector<std::uint64_t> elems;
        for (const auto& e : j) {
            if (!e.is_number_unsigned())
                throw input_error("gap list entries must be nonnegative integers");
            elems.push_back(e.get<std::uint64_t>());
        }
        return GapSet::finite(std::move(elems));
    }
    throw input_error("gaps must be a list or \"pow2\"");
}

SpecPtr parse_json_value(const json& j) {
    if (!j.is_object())
        throw input_error("spec document must be a JSON object");
    if (!j.contains("family"))
        throw input_error("spec document missing \"family\"");
    std::string family = j.at("family").get<std::string>();

    if (family == "dyck") {
        require_keys(j, {"family", "n"});
        if (!j.contains("n") || !j.at("n").is_number_integer())
            throw input_error("dyck spec needs integer n");
        return make_dyck(j.at("n").get<int>());
    }
    if (family == "sgap") {
        require_keys(j, {"family", "gaps"});
        if (!j.contains("gaps"))
            throw input_error("sgap spec needs gaps");
        return make_sgap(parse_gaps_json(j.at("gaps")));
    }
    if (family == "beta") {
        require_keys(j, {"family", "digits"});
        if (!j.contains("digits") || !j.at("digits").is_string())
            throw input_error("beta spec needs a digits string");
        std::string d = j.at("digits").get<std::string>();
        return make_beta(d == "fig3" ? DigitStream::fig3()
                                     : DigitStream::explicit_digits(d));
    }
    if (family == "product") {
        require_keys(j, {"family", "left", "right"});
        if (!j.contains("left") || !j.contains("right"))
            throw input_error("product spec needs left and right");
        return make_product(parse_json_value(j.at("left")),
                            parse_json_value(j.at("right")));
    }
    if (family == "star") {
        require_keys(j, {"family", "inner"});
        if (!j.contains("inner"))
            throw input_error("star spec needs inner");
        return make_star(parse_json_value(j.at("inner")));
    }
    if (family == "sft") {
        require_keys(j, {"family", "alphabet", "forbidden"});
        if (!j.contains("alphabet") || !j.at("alphabet").is_array())
            throw input_error("sft spec needs an alphabet list");
        std::vector<std::string> names;
        for (const auto& e : j.at("alphabet"))
            names.push_back(e.get<std::string>());
        Alphabet alpha(names);
        std::vector<Word> forbidden;
        if (j.contains("forbidden"))
            for (const auto& e : j.at("forbidden"))
                forbidden.push_back(alpha.parse(e.get<std::string>()));
        return make_sft(std::move(alpha), std::move(forbidden));
    }
    throw input_error("unknown family: " + family);
}

// compact form ------------------------------------------------------------

struct CompactParser {
    const std::string& s;
    size_t pos = 0;

    explicit CompactParser(const std::string& text) : s(text) {}

    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    void expect(char c) {
        if (eof() || s[pos] != c)
            throw input_error("bad spec string near position " + std::to_string(pos) +
                              " in '" + s + "'");
        ++pos;
    }

    std::string take_until(const std::string& stops) {
        size_t start = pos;
        while (!eof() && stops.find(s[pos]) == std::string::npos)
            ++pos;
        return s.substr(start, pos - start);
    }

    SpecPtr parse() {
        std::string fam = take_until(":");
        expect(':');
        if (fam == "dyck") {
            std::string num = take_until(",)");
            try {
                return make_dyck(std::stoi(num));
            } catch (const std::invalid_argument&) {
                throw input_error("dyck spec needs a number: '" + num + "'");
            }
        }
        if (fam == "sgap") {
            if (!eof() && peek() == '[') {
                expect('[');
                std::string body = take_until("]");
                expect(']');
                std::vector<std::uint64_t> elems;
                std::stringstream ss(body);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    if (item.empty() ||
                        item.find_first_not_of("0123456789") != std::string::npos)
                        throw input_error("bad gap list entry: '" + item + "'");
                    elems.push_back(std::stoull(item));
                }
                return make_sgap(GapSet::finite(std::move(elems)));
            }
            std::string name = take_until(",)");
            if (name == "pow2")
                return make_sgap(GapSet::pow2());
            throw input_error("sgap spec needs 'pow2' or a [list]: '" + name + "'");
        }
        if (fam == "beta") {
            std::string d = take_until(",)");
            return make_beta(d == "fig3" ? DigitStream::fig3()
                                         : DigitStream::explicit_digits(d));
        }
        if (fam == "star") {
            if (!eof() && peek() == '(') {
                expect('(');
                SpecPtr inner = parse();
                expect(')');
                return make_star(inner);
            }
            return make_star(parse());
        }
        if (fam == "product") {
            expect('(');
            SpecPtr left = parse();
            expect(',');
            SpecPtr right = parse();
            expect(')');
            return make_product(left, right);
        }
        if (fam == "sft") {
            // sft:SYMBOLS:{w1,w2,...} with one-character symbols
            std::string syms = take_until(":");
            expect(':');
            expect('{');
            std::string body = take_until("}");
            expect('}');
            std::vector<std::string> names;
            for (char c : syms)
                names.emplace_back(1, c);
            Alphabet alpha(names);
            std::vector<Word> forbidden;
            std::stringstream ss(body);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty())
                    forbidden.push_back(alpha.parse(item));
            return make_sft(std::move(alpha), std::move(forbidden));
        }
        throw input_error("unknown family in spec string: " + fam);
    }
};

}  // namespace

SpecPtr parse_spec_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw input_error(std::string("bad JSON: ") + e.what());
    }
    return parse_json_value(j);
}

SpecPtr parse_spec_compact(const std::string& text) {
    CompactParser p(text);
    SpecPtr spec = p.parse();
    if (!p.eof())
        throw input_error("trailing characters in spec string: '" +
                          text.substr(p.pos) + "'");
    return spec;
}

SpecPtr load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open spec file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_spec_json(ss.str());
}

}  // namespace shiftlab
