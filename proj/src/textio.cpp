#include "wckit/textio.hpp"

#include <sstream>

#include "wckit/errors.hpp"

namespace wc {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

static std::vector<std::string> tokens_of(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int64_t parse_int(const std::string& text) {
    try {
        size_t used = 0;
        int64_t v = std::stoll(text, &used);
        if (used != text.size()) throw validation_error("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw validation_error("cannot parse integer: '" + text + "'");
    }
}

std::vector<int64_t> parse_int_list(const std::string& text, char sep) {
    std::vector<int64_t> out;
    if (text.empty()) return out;
    for (const auto& part : split(text, sep)) out.push_back(parse_int(part));
    return out;
}

static void expect_tag(const std::vector<std::string>& toks, const std::string& tag,
                       size_t count) {
    if (toks.empty() || toks[0] != tag)
        throw validation_error("expected spec starting with '" + tag + "'");
    if (toks.size() != count)
        throw validation_error(tag + " spec needs " + std::to_string(count - 1) + " fields, got " +
                               std::to_string(toks.size() - 1));
}

WeierstrassCurve parse_wcurve(const std::string& spec) {
    auto toks = tokens_of(spec);
    expect_tag(toks, "wcurve", 4);
    return WeierstrassCurve(parse_int(toks[1]), parse_int(toks[2]), parse_int(toks[3]));
}

PlaneCubic parse_cubic(const std::string& spec) {
    auto toks = tokens_of(spec);
    expect_tag(toks, "cubic", 12);
    std::array<int64_t, 10> c;
    for (int i = 0; i < 10; ++i) c[i] = parse_int(toks[2 + i]);
    return PlaneCubic(parse_int(toks[1]), c);
}

static std::string kv_lookup(const std::vector<std::string>& toks, const std::string& key,
                             bool required, const std::string& fallback = "") {
    for (size_t i = 1; i < toks.size(); ++i) {
        auto eq = toks[i].find('=');
        if (eq == std::string::npos)
            throw validation_error("expected key=value field, got '" + toks[i] + "'");
        if (toks[i].substr(0, eq) == key) return toks[i].substr(eq + 1);
    }
    if (required) throw validation_error("missing field '" + key + "'");
    return fallback;
}

RationalCurve parse_rcurve(const std::string& spec) {
    auto toks = tokens_of(spec);
    if (toks.empty() || toks[0] != "rcurve")
        throw validation_error("expected spec starting with 'rcurve'");
    return RationalCurve(parse_rational(kv_lookup(toks, "a", true)),
                         parse_rational(kv_lookup(toks, "b", true)));
}

WCModel parse_wcmodel(const std::string& spec) {
    auto toks = tokens_of(spec);
    if (toks.empty() || toks[0] != "wc")
        throw validation_error("expected spec starting with 'wc'");
    int64_t n = parse_int(kv_lookup(toks, "n", true));
    return WCModel(n, parse_int_list(kv_lookup(toks, "aut", true)));
}

static std::vector<int64_t> parse_tuple_list(const FiniteAbelianGroup& module,
                                             const std::string& text) {
    std::vector<int64_t> out;
    if (text.empty()) return out;
    for (const auto& part : split(text, ';')) out.push_back(module.index_of(parse_int_list(part)));
    return out;
}

SplitBrauerModel parse_brmodel(const std::string& spec) {
    auto toks = tokens_of(spec);
    if (toks.empty() || toks[0] != "brmodel")
        throw validation_error("expected spec starting with 'brmodel'");
    int64_t n = parse_int(kv_lookup(toks, "n", true));
    FiniteAbelianGroup brauer(parse_int_list(kv_lookup(toks, "br", true)));
    auto gens = parse_tuple_list(brauer, kv_lookup(toks, "brs", false));
    return SplitBrauerModel(n, std::move(brauer), gens);
}

FiniteGroup parse_group(const std::string& spec) {
    if (spec == "trivial") return FiniteGroup::trivial();
    if (spec == "klein4") return FiniteGroup::klein_four();
    if (spec == "sym3") return FiniteGroup::symmetric3();
    if (spec.rfind("cyclic:", 0) == 0)
        return FiniteGroup::cyclic(static_cast<int>(parse_int(spec.substr(7))));
    if (spec.rfind("table:", 0) == 0) {
        std::vector<std::vector<int>> rows;
        for (const auto& row : split(spec.substr(6), ';')) {
            std::vector<int> r;
            for (int64_t v : parse_int_list(row)) r.push_back(static_cast<int>(v));
            rows.push_back(std::move(r));
        }
        return FiniteGroup::from_table(rows);
    }
    throw validation_error("unknown group spec '" + spec +
                           "' (want trivial|cyclic:<k>|klein4|sym3|table:...)");
}

GModule parse_gmodule(const std::string& group_spec, const std::string& module_spec,
                      const std::string& action_spec) {
    FiniteGroup group = parse_group(group_spec);
    FiniteAbelianGroup module(parse_int_list(module_spec));
    if (action_spec == "trivial") return GModule::trivial(std::move(group), std::move(module));
    if (action_spec.rfind("mult:", 0) == 0)
        return GModule::from_multipliers(std::move(group), std::move(module),
                                         parse_int_list(action_spec.substr(5)));
    if (action_spec.rfind("mat:", 0) == 0) {
        std::vector<std::vector<std::vector<int64_t>>> images;
        for (const auto& elem : split(action_spec.substr(4), ';')) {
            std::vector<std::vector<int64_t>> gens;
            for (const auto& img : split(elem, '|')) gens.push_back(parse_int_list(img));
            images.push_back(std::move(gens));
        }
        return GModule::from_generator_images(std::move(group), std::move(module), images);
    }
    throw validation_error("unknown action spec '" + action_spec +
                           "' (want trivial|mult:<u,...>|mat:<img|img;...>)");
}

std::vector<int64_t> parse_module_values(const FiniteAbelianGroup& module,
                                         const std::string& values_spec, size_t expected) {
    std::vector<int64_t> out;
    for (const auto& part : split(values_spec, ';')) out.push_back(module.index_of(parse_int_list(part)));
    if (out.size() != expected)
        throw validation_error("expected " + std::to_string(expected) + " values, got " +
                               std::to_string(out.size()));
    return out;
}

} // namespace wc
