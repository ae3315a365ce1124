#include "dzv/serialize.hpp"

#include "dzv/errors.hpp"

namespace dzv {

using nlohmann::json;

json to_json(const Decomposition& d) {
    json terms = json::array();
    for (const auto& [w, c] : d.value.terms()) {
        json t;
        t["word"] = w.letters;
        t["f2"] = w.f2;
        t["coef"] = rational_str(c);
        terms.push_back(t);
    }
    json out;
    out["a"] = d.a;
    out["b"] = d.b;
    out["weight"] = d.a + d.b;
    if (d.modulo_f2_power)
        out["modulo_f2_power"] = *d.modulo_f2_power;
    else
        out["modulo_f2_power"] = nullptr;
    out["terms"] = terms;
    return out;
}

Decomposition decomposition_from_json(const json& j) {
    Decomposition d;
    d.a = j.at("a").get<int>();
    d.b = j.at("b").get<int>();
    if (!j.at("modulo_f2_power").is_null())
        d.modulo_f2_power = j.at("modulo_f2_power").get<int>();
    for (const auto& t : j.at("terms")) {
        FWord w;
        w.letters = t.at("word").get<std::vector<int>>();
        w.f2 = t.at("f2").get<int>();
        d.value.add_term(w, rational_from_str(t.at("coef").get<std::string>()));
    }
    return d;
}

json to_json(const IndexData& ix) {
    return json{{"I", ix.I}, {"J", ix.J}, {"d", ix.d}, {"N", ix.N}};
}

IndexData index_data_from_json(const json& j) {
    IndexData ix;
    ix.I = j.at("I").get<std::vector<int>>();
    ix.J = j.at("J").get<std::vector<int>>();
    ix.d = j.at("d").get<int>();
    ix.N = j.at("N").get<int>();
    return ix;
}

namespace {

std::string kind_str(EntryDescriptor::Kind k) {
    switch (k) {
        case EntryDescriptor::Kind::Zero: return "zero";
        case EntryDescriptor::Kind::One: return "one";
        case EntryDescriptor::Kind::TorusPower: return "torus_power";
        case EntryDescriptor::Kind::FreeParam: return "free_param";
        case EntryDescriptor::Kind::Scaled: return "scaled";
        case EntryDescriptor::Kind::Square: return "square";
    }
    throw Error("unknown descriptor kind");
}

EntryDescriptor::Kind kind_from_str(const std::string& s) {
    if (s == "zero") return EntryDescriptor::Kind::Zero;
    if (s == "one") return EntryDescriptor::Kind::One;
    if (s == "torus_power") return EntryDescriptor::Kind::TorusPower;
    if (s == "free_param") return EntryDescriptor::Kind::FreeParam;
    if (s == "scaled") return EntryDescriptor::Kind::Scaled;
    if (s == "square") return EntryDescriptor::Kind::Square;
    throw DomainError("unknown descriptor kind '" + s + "'");
}

}  // namespace

json to_json(const GaloisPresentation& p) {
    json entries = json::array();
    for (const auto& row : p.entries) {
        json jrow = json::array();
        for (const auto& e : row) {
            json je;
            je["kind"] = kind_str(e.kind);
            switch (e.kind) {
                case EntryDescriptor::Kind::TorusPower: je["power"] = e.power; break;
                case EntryDescriptor::Kind::FreeParam: je["name"] = e.name; break;
                case EntryDescriptor::Kind::Scaled:
                case EntryDescriptor::Kind::Square:
                    je["name"] = e.name;
                    je["c"] = rational_str(e.c);
                    break;
                default: break;
            }
            jrow.push_back(je);
        }
        entries.push_back(jrow);
    }
    json ties = json::array();
    for (const auto& t : p.ties) {
        ties.push_back(json{{"first", {t.first_cell.first, t.first_cell.second}},
                            {"later", {t.later_cell.first, t.later_cell.second}},
                            {"ratio", rational_str(t.ratio)}});
    }
    return json{{"weights", p.basis_weights}, {"entries", entries}, {"ties", ties}};
}

GaloisPresentation presentation_from_json(const json& j) {
    GaloisPresentation p;
    p.basis_weights = j.at("weights").get<std::vector<int>>();
    for (const auto& jrow : j.at("entries")) {
        std::vector<EntryDescriptor> row;
        for (const auto& je : jrow) {
            EntryDescriptor e;
            e.kind = kind_from_str(je.at("kind").get<std::string>());
            if (je.contains("power")) e.power = je.at("power").get<int>();
            if (je.contains("name")) e.name = je.at("name").get<std::string>();
            if (je.contains("c")) e.c = rational_from_str(je.at("c").get<std::string>());
            row.push_back(e);
        }
        p.entries.push_back(std::move(row));
    }
    for (const auto& jt : j.at("ties")) {
        Tie t;
        t.first_cell = {jt.at("first")[0].get<int>(), jt.at("first")[1].get<int>()};
        t.later_cell = {jt.at("later")[0].get<int>(), jt.at("later")[1].get<int>()};
        t.ratio = rational_from_str(jt.at("ratio").get<std::string>());
        p.ties.push_back(t);
    }
    return p;
}

}  // namespace dzv
