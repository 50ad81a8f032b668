#include "wdecomp/io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace wdecomp {

using nlohmann::json;

std::string serialize_decomposition(const DecompositionFile& file) {
    const Decomposition<Complex>& dec = file.decomposition;
    json terms = json::array();
    for (const auto& t : dec.terms) {
        json vectors = json::array();
        for (const auto& f : t.factors)
            vectors.push_back({{f[0].real(), f[0].imag()}, {f[1].real(), f[1].imag()}});
        terms.push_back({{"coeff", {t.weight.real(), t.weight.imag()}}, {"vectors", vectors}});
    }
    json anchors = json::array();
    for (const auto& a : file.meta.anchors) anchors.push_back(a);
    const json j = {
        {"dims", dec.profile.degrees},
        {"scale", dec.target_scale},
        {"terms", terms},
        {"meta",
         {{"tool", file.meta.tool},
          {"anchors", anchors},
          {"tolerance", file.meta.tolerance},
          {"residual", file.meta.residual}}},
    };
    return j.dump(2);
}

DecompositionFile parse_decomposition(const std::string& json_text) {
    const json j = json::parse(json_text);
    DecompositionFile file;
    file.decomposition.profile = DegreeProfile(j.at("dims").get<std::vector<int>>());
    file.decomposition.target_scale = j.at("scale").get<double>();
    const int k = file.decomposition.profile.k();
    for (const auto& jt : j.at("terms")) {
        RankOneTerm<Complex> term;
        const auto coeff = jt.at("coeff").get<std::vector<double>>();
        if (coeff.size() != 2) throw std::invalid_argument("coeff must be [re, im]");
        term.weight = Complex(coeff[0], coeff[1]);
        const auto& vecs = jt.at("vectors");
        if (static_cast<int>(vecs.size()) != k)
            throw std::invalid_argument("term has wrong number of factor vectors");
        for (const auto& v : vecs) {
            const auto p = v.at(0).get<std::vector<double>>();
            const auto q = v.at(1).get<std::vector<double>>();
            if (p.size() != 2 || q.size() != 2)
                throw std::invalid_argument("factor vector entries must be [re, im]");
            term.factors.push_back({Complex(p[0], p[1]), Complex(q[0], q[1])});
        }
        file.decomposition.terms.push_back(std::move(term));
    }
    if (j.contains("meta")) {
        const auto& m = j.at("meta");
        file.meta.tool = m.value("tool", std::string{});
        file.meta.tolerance = m.value("tolerance", 0.0);
        file.meta.residual = m.value("residual", 0.0);
        if (m.contains("anchors"))
            for (const auto& a : m.at("anchors"))
                file.meta.anchors.push_back(a.get<MultiIndex>());
    }
    return file;
}

void write_decomposition_file(const std::string& path, const DecompositionFile& file) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    os << serialize_decomposition(file) << "\n";
}

DecompositionFile read_decomposition_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    return parse_decomposition(text);
}

}  // namespace wdecomp
