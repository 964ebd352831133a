#include "cb/cli.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cb::cli {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return s;
}

Block block_from_name(const std::string& name) {
    const std::string u = upper(name);
    if (u == "CP2") return Block::CP2;
    if (u == "-CP2") return Block::CP2Bar;
    if (u == "S2XS2") return Block::S2xS2;
    if (u == "E8") return Block::E8;
    if (u == "-E8") return Block::E8Bar;
    if (u == "K3") return Block::K3;
    throw std::invalid_argument("unknown block '" + name +
                                "' (expected CP2, -CP2, S2xS2, E8, -E8 or K3)");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

json group_to_json(const FgAbelianGroup& g) {
    json torsion = json::array();
    for (const Int& t : g.torsion) torsion.push_back(t.str());
    return {{"free_rank", g.free_rank}, {"torsion", torsion}, {"display", g.display()}};
}

FgAbelianGroup group_from_json(const json& j) {
    FgAbelianGroup g;
    g.free_rank = j.at("free_rank").get<std::size_t>();
    for (const auto& t : j.at("torsion")) g.torsion.emplace_back(t.get<std::string>());
    return g;
}

json int_vector_to_json(const std::vector<Int>& v) {
    json out = json::array();
    for (const Int& x : v) out.push_back(x.str());
    return out;
}

std::vector<Int> int_vector_from_json(const json& j) {
    std::vector<Int> v;
    for (const auto& x : j) v.emplace_back(x.get<std::string>());
    return v;
}

json summary_to_json(const ManifoldSummary& s) {
    return {{"label", s.label},
            {"rank", s.rank},
            {"signature", s.signature},
            {"even", s.even},
            {"wu", s.wu}};
}

ManifoldSummary summary_from_json(const json& j) {
    ManifoldSummary s;
    s.label = j.at("label").get<std::string>();
    s.rank = j.at("rank").get<std::size_t>();
    s.signature = j.at("signature").get<long long>();
    s.even = j.at("even").get<bool>();
    s.wu = j.at("wu").get<Mod2Vector>();
    return s;
}

json result_to_json(const FiveManifoldType& t) {
    return {{"kind", FiveManifoldType::kind_name(t.kind)},
            {"s2xs3_count", t.s2xs3_count},
            {"display", t.display()}};
}

FiveManifoldType result_from_json(const json& j) {
    FiveManifoldType t;
    t.kind = j.at("kind").get<std::string>() == "CONN_SUM" ? FiveManifoldType::Kind::ConnSum
                                                           : FiveManifoldType::Kind::BConnSum;
    t.s2xs3_count = j.at("s2xs3_count").get<std::size_t>();
    return t;
}

std::string vec_display(const std::vector<Int>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << ")";
    return os.str();
}

std::string wu_display(const Mod2Vector& w) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ", ";
        os << int(w[i]);
    }
    os << ")";
    return os.str();
}

void print_summary(std::ostream& os, const ManifoldSummary& s) {
    os << "manifold:     " << (s.label.empty() ? "(gram matrix)" : s.label) << "\n"
       << "rank:         " << s.rank << "\n"
       << "signature:    " << s.signature << "\n"
       << "parity:       " << (s.even ? "even" : "odd") << "\n"
       << "wu class:     " << wu_display(s.wu) << "\n";
}

}  // namespace

FourManifold parse_manifold_expression(const std::string& text) {
    std::vector<std::pair<Block, std::size_t>> expr;
    for (const std::string& raw : split(text, '#')) {
        std::string term = trim(raw);
        if (term.empty()) throw std::invalid_argument("empty term in manifold expression");
        std::size_t count = 1;
        auto star = term.find('*');
        if (star != std::string::npos) {
            std::string count_str = trim(term.substr(0, star));
            try {
                std::size_t pos = 0;
                long long c = std::stoll(count_str, &pos);
                if (pos != count_str.size() || c < 1) throw std::invalid_argument("");
                count = static_cast<std::size_t>(c);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad multiplicity '" + count_str + "' in expression");
            }
            term = trim(term.substr(star + 1));
        }
        expr.emplace_back(block_from_name(term), count);
    }
    return FourManifold::from_blocks(expr);
}

FourManifold read_gram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open gram file '" + path + "'");
    long long n = 0;
    if (!(in >> n) || n < 1) throw std::invalid_argument("gram file: bad dimension line");
    IntegerMatrix gram(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            std::string tok;
            if (!(in >> tok)) throw std::invalid_argument("gram file: not enough entries");
            try {
                gram(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Int(tok);
            } catch (const std::exception&) {
                throw std::invalid_argument("gram file: bad integer '" + tok + "'");
            }
        }
    return FourManifold(std::move(gram), "");
}

std::vector<Int> parse_integer_vector(const std::string& text) {
    std::string norm = text;
    std::replace(norm.begin(), norm.end(), ',', ' ');
    std::istringstream is(norm);
    std::vector<Int> out;
    std::string tok;
    while (is >> tok) {
        try {
            out.emplace_back(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer '" + tok + "' in vector");
        }
    }
    return out;
}

ManifoldSummary summarize(const FourManifold& m) {
    return {m.label(), m.rank(), m.signature(), m.is_even(), m.wu_class().coords};
}

ClassifyReport run_classify(const FourManifold& m, const EulerClass& alpha) {
    ClassifyReport r{summarize(m), alpha.coords, divisibility(m, alpha), std::nullopt};
    if (r.divisibility == 1) r.result = classify(m, alpha);
    return r;
}

CohomologyReport run_cohomology(const FourManifold& m, const EulerClass& alpha) {
    return {summarize(m), alpha.coords, divisibility(m, alpha), cohomology(m, alpha)};
}

SurveyReport run_survey(const FourManifold& m, long long bound) {
    SurveyReport r{summarize(m), bound, 0, {}};
    std::size_t spin = 0, nonspin = 0;
    FiveManifoldType spin_type, nonspin_type;
    PrimitiveEnumerator en(m.rank(), bound);
    while (auto alpha = en.next()) {
        ++r.primitive_count;
        FiveManifoldType t = classify(m, *alpha);
        if (t.kind == FiveManifoldType::Kind::ConnSum) {
            spin_type = t;
            ++spin;
        } else {
            nonspin_type = t;
            ++nonspin;
        }
    }
    if (spin) r.outcomes.emplace_back(spin_type, spin);
    if (nonspin) r.outcomes.emplace_back(nonspin_type, nonspin);
    return r;
}

SpinClassReport run_spin_class(const FourManifold& m) {
    EulerClass alpha = find_spin_euler_class(m);
    return {summarize(m), alpha.coords, classify(m, alpha)};
}

std::string s2_bundle_total_space(long long p) {
    if (p == 0) return "S^2 x S^1";
    long long a = p < 0 ? -p : p;
    if (a == 1) return "S^3";
    return "L(" + std::to_string(a) + ",1)";
}

json to_json(const ClassifyReport& r) {
    json j = summary_to_json(r.manifold);
    j["alpha"] = int_vector_to_json(r.alpha);
    j["divisibility"] = r.divisibility.str();
    j["result"] = r.result ? result_to_json(*r.result) : json(nullptr);
    return j;
}

json to_json(const CohomologyReport& r) {
    json j = summary_to_json(r.manifold);
    j["alpha"] = int_vector_to_json(r.alpha);
    j["divisibility"] = r.divisibility.str();
    json h = json::array();
    for (const auto& g : r.profile.h) h.push_back(group_to_json(g));
    j["cohomology"] = h;
    j["pi1_order"] = r.profile.pi1_order.str();
    return j;
}

json to_json(const SurveyReport& r) {
    json j = summary_to_json(r.manifold);
    j["bound"] = r.bound;
    j["primitive_count"] = r.primitive_count;
    json outcomes = json::array();
    for (const auto& [t, n] : r.outcomes) {
        json o = result_to_json(t);
        o["count"] = n;
        outcomes.push_back(o);
    }
    j["outcomes"] = outcomes;
    return j;
}

json to_json(const SpinClassReport& r) {
    json j = summary_to_json(r.manifold);
    j["alpha"] = int_vector_to_json(r.alpha);
    j["result"] = result_to_json(r.result);
    return j;
}

ClassifyReport classify_report_from_json(const json& j) {
    ClassifyReport r;
    r.manifold = summary_from_json(j);
    r.alpha = int_vector_from_json(j.at("alpha"));
    r.divisibility = Int(j.at("divisibility").get<std::string>());
    if (!j.at("result").is_null()) r.result = result_from_json(j.at("result"));
    return r;
}

CohomologyReport cohomology_report_from_json(const json& j) {
    CohomologyReport r;
    r.manifold = summary_from_json(j);
    r.alpha = int_vector_from_json(j.at("alpha"));
    r.divisibility = Int(j.at("divisibility").get<std::string>());
    const auto& h = j.at("cohomology");
    for (std::size_t k = 0; k < 6; ++k) r.profile.h[k] = group_from_json(h.at(k));
    r.profile.pi1_order = Int(j.at("pi1_order").get<std::string>());
    return r;
}

SurveyReport survey_report_from_json(const json& j) {
    SurveyReport r;
    r.manifold = summary_from_json(j);
    r.bound = j.at("bound").get<long long>();
    r.primitive_count = j.at("primitive_count").get<std::size_t>();
    for (const auto& o : j.at("outcomes"))
        r.outcomes.emplace_back(result_from_json(o), o.at("count").get<std::size_t>());
    return r;
}

SpinClassReport spin_class_report_from_json(const json& j) {
    SpinClassReport r;
    r.manifold = summary_from_json(j);
    r.alpha = int_vector_from_json(j.at("alpha"));
    r.result = result_from_json(j.at("result"));
    return r;
}

std::string to_text(const ClassifyReport& r) {
    std::ostringstream os;
    print_summary(os, r.manifold);
    os << "alpha:        " << vec_display(r.alpha) << "\n"
       << "divisibility: " << r.divisibility << "\n";
    if (r.result) {
        os << "total space:  " << r.result->display() << "\n";
    } else {
        os << "total space:  not classified: alpha is not primitive (divisibility "
           << r.divisibility << "); use the cohomology command instead\n";
    }
    return os.str();
}

std::string to_text(const CohomologyReport& r) {
    std::ostringstream os;
    print_summary(os, r.manifold);
    os << "alpha:        " << vec_display(r.alpha) << "\n"
       << "divisibility: " << r.divisibility << "\n";
    for (std::size_t k = 0; k < 6; ++k)
        os << "H^" << k << ":          " << r.profile.h[k].display() << "\n";
    os << "pi_1:         "
       << (r.profile.pi1_order == 0
               ? std::string("Z")
               : (r.profile.pi1_order == 1 ? std::string("0")
                                           : "Z/" + r.profile.pi1_order.str()))
       << "\n";
    return os.str();
}

std::string to_text(const SurveyReport& r) {
    std::ostringstream os;
    print_summary(os, r.manifold);
    os << "bound:        " << r.bound << "\n"
       << "primitives:   " << r.primitive_count << "\n";
    for (const auto& [t, n] : r.outcomes)
        os << "outcome:      " << t.display() << "  x " << n << "\n";
    return os.str();
}

std::string to_text(const SpinClassReport& r) {
    std::ostringstream os;
    print_summary(os, r.manifold);
    os << "alpha:        " << vec_display(r.alpha) << "\n"
       << "total space:  " << r.result.display() << "\n";
    return os.str();
}

}  // namespace cb::cli
