#include "infoclust/model_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace infoclust {

namespace {

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) {
                return key == a;
            }) == allowed.end())
            throw ModelParseError("unknown key \"" + key + "\" in " + where);
    }
}

mpq_class parse_weight(const json& j, const std::string& where) {
    if (!j.is_string())
        throw ModelParseError(where + " must be a rational string like \"1/3\"");
    try {
        return Value::parse(j.get<std::string>(), Value::Kind::exact).rational();
    } catch (const Error& e) {
        throw ModelParseError(where + ": " + e.what());
    }
}

int name_index(const std::vector<std::string>& names, const std::string& name,
               const std::string& what) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
        throw ModelParseError("undeclared " + what + " \"" + name + "\"");
    return static_cast<int>(it - names.begin());
}

SourceModel load_linear_atomic(const json& doc, const GroundSet& ground) {
    LinearAtomicSource src;
    if (doc.contains("bits")) {
        if (!doc["bits"].is_array())
            throw ModelParseError("\"bits\" must be an array of names");
        for (const auto& b : doc["bits"])
            src.bit_names.push_back(b.get<std::string>());
    }
    if (doc.contains("atoms")) {
        if (!doc["atoms"].is_object())
            throw ModelParseError("\"atoms\" must map names to rational weights");
        for (const auto& [name, w] : doc["atoms"].items()) {
            mpq_class weight = parse_weight(w, "atom \"" + name + "\"");
            if (weight <= 0)
                throw ModelParseError("atom \"" + name + "\" needs a positive weight");
            src.atom_names.push_back(name);
            src.atom_weights.push_back(weight);
        }
    }
    if (src.bit_names.size() > 64)
        throw ModelParseError("at most 64 bit primitives supported");

    const json& vars = doc["variables"];
    for (const auto& [vname, vdef] : vars.items()) {
        if (!vdef.is_object())
            throw ModelParseError("variable \"" + vname + "\" must be an object");
        reject_unknown_keys(vdef, {"bits", "atoms"}, "variable \"" + vname + "\"");
        LinearAtomicSource::VariableDef def;
        if (vdef.contains("bits")) {
            for (const auto& combo_j : vdef["bits"]) {
                std::string combo = combo_j.get<std::string>();
                std::uint64_t mask = 0;
                std::stringstream ss(combo);
                std::string term;
                while (std::getline(ss, term, '+')) {
                    // Trim surrounding spaces.
                    auto a = term.find_first_not_of(' ');
                    auto b = term.find_last_not_of(' ');
                    if (a == std::string::npos)
                        throw ModelParseError("empty term in combination \"" + combo + "\"");
                    term = term.substr(a, b - a + 1);
                    if (std::find(src.atom_names.begin(), src.atom_names.end(), term) !=
                        src.atom_names.end())
                        throw ModelParseError("atom \"" + term +
                                              "\" may not appear inside a linear combination");
                    mask |= 1ull << name_index(src.bit_names, term, "bit");
                }
                if (mask == 0)
                    throw ModelParseError("empty combination for variable \"" + vname + "\"");
                def.combos.push_back(mask);
            }
        }
        if (vdef.contains("atoms")) {
            for (const auto& a : vdef["atoms"])
                def.atoms |= 1ull << name_index(src.atom_names, a.get<std::string>(), "atom");
        }
        src.defs.push_back(std::move(def));
    }
    return SourceModel(ground, std::move(src));
}

SourceModel load_pmf(const json& doc, const GroundSet& ground) {
    PmfSource src;
    src.arity = ground.size();
    if (!doc.contains("outcomes") || !doc["outcomes"].is_array())
        throw ModelParseError("pmf model requires an \"outcomes\" array");
    for (const auto& o : doc["outcomes"]) {
        if (!o.is_object())
            throw ModelParseError("each outcome must be an object");
        reject_unknown_keys(o, {"p", "values"}, "outcome");
        if (!o.contains("p") || !o.contains("values"))
            throw ModelParseError("each outcome needs \"p\" and \"values\"");
        PmfSource::Outcome out;
        out.prob = parse_weight(o["p"], "outcome probability");
        for (const auto& v : o["values"]) {
            if (!v.is_number_integer())
                throw ModelParseError("outcome values must be integers");
            out.values.push_back(v.get<int>());
        }
        src.outcomes.push_back(std::move(out));
    }
    return SourceModel(ground, std::move(src));
}

SourceModel load_entropy_table(const json& doc, const GroundSet& ground) {
    int n = ground.size();
    if (!doc.contains("entropy") || !doc["entropy"].is_object())
        throw ModelParseError("entropy-table model requires an \"entropy\" object");
    EntropyTableSource src;
    src.table.assign(std::size_t(1) << n, mpq_class(0));
    std::vector<bool> seen(std::size_t(1) << n, false);
    seen[0] = true;
    for (const auto& [key, val] : doc["entropy"].items()) {
        std::uint32_t mask = 0;
        std::stringstream ss(key);
        std::string name;
        while (std::getline(ss, name, ','))
            mask |= 1u << ground.index(name);
        if (mask == 0)
            throw ModelParseError("empty entropy key");
        if (seen[mask])
            throw ModelParseError("duplicate entropy entry for \"" + key + "\"");
        seen[mask] = true;
        src.table[mask] = parse_weight(val, "entropy of \"" + key + "\"");
    }
    for (std::uint32_t m = 1; m < (1u << n); ++m)
        if (!seen[m])
            throw ModelParseError("entropy table is missing " + Subset(m, n).str(ground));
    return SourceModel(ground, std::move(src));
}

} // namespace

LoadedModel load_model(const json& doc) {
    if (!doc.is_object())
        throw ModelParseError("model document must be a JSON object");
    reject_unknown_keys(doc,
                        {"model", "variables", "bits", "atoms", "outcomes", "entropy",
                         "dependent"},
                        "model document");
    if (!doc.contains("model") || !doc["model"].is_string())
        throw ModelParseError("missing \"model\" kind");
    std::string kind = doc["model"].get<std::string>();
    if (!doc.contains("variables"))
        throw ModelParseError("missing \"variables\"");

    std::vector<std::string> names;
    if (kind == "linear_atomic") {
        if (!doc["variables"].is_object())
            throw ModelParseError("linear-atomic \"variables\" must be an object");
        for (const auto& [name, def] : doc["variables"].items())
            names.push_back(name);
    } else {
        if (!doc["variables"].is_array())
            throw ModelParseError("\"variables\" must be an array of names");
        for (const auto& v : doc["variables"])
            names.push_back(v.get<std::string>());
    }

    GroundSet ground = [&] {
        try {
            return GroundSet(names);
        } catch (const Error& e) {
            throw ModelParseError(e.what());
        }
    }();

    std::optional<std::string> dependent;
    if (doc.contains("dependent")) {
        dependent = doc["dependent"].get<std::string>();
        ground.index(*dependent); // throws UnknownVariable if undeclared
    }

    if (kind == "linear_atomic") {
        reject_unknown_keys(doc, {"model", "variables", "bits", "atoms", "dependent"},
                            "linear-atomic document");
        return {load_linear_atomic(doc, ground), dependent};
    }
    if (kind == "pmf") {
        reject_unknown_keys(doc, {"model", "variables", "outcomes", "dependent"},
                            "pmf document");
        return {load_pmf(doc, ground), dependent};
    }
    if (kind == "entropy_table") {
        reject_unknown_keys(doc, {"model", "variables", "entropy", "dependent"},
                            "entropy-table document");
        return {load_entropy_table(doc, ground), dependent};
    }
    throw ModelParseError("unknown model kind \"" + kind + "\"");
}

LoadedModel load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ModelParseError("cannot open model file: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ModelParseError(std::string("invalid JSON: ") + e.what());
    }
    return load_model(doc);
}

Subset parse_variable_set(const GroundSet& ground, const std::string& csv) {
    if (csv.empty())
        throw EmptySet("variable set must not be empty");
    Subset out = Subset::empty_of(ground.size());
    std::stringstream ss(csv);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (name.empty())
            throw EmptySet("empty variable name in set");
        out = out.with(ground.index(name));
    }
    return out;
}

} // namespace infoclust
