#include "report.hpp"

#include "lexmorse/error.hpp"
#include "lexmorse/homology.hpp"
#include "lexmorse/lex_morse.hpp"
#include "lexmorse/mobius.hpp"
#include "lexmorse/multiset.hpp"
#include "lexmorse/shelling.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lexmorse::cli {

namespace {

Json ids(const Poset& p, std::span<const Element> es) {
    Json out = Json::array();
    for (Element e : es) out.push_back(p.id(e));
    return out;
}

Json intervals(std::span<const RankInterval> ivs) {
    Json out = Json::array();
    for (const auto& iv : ivs) out.push_back({iv.lo, iv.hi});
    return out;
}

Json counts(const std::vector<long long>& v) { return Json(v); }

void add_check(Json& checks, const std::string& name, bool pass, const std::string& detail = {}) {
    Json c;
    c["name"] = name;
    c["pass"] = pass;
    if (!detail.empty()) c["detail"] = detail;
    checks.push_back(std::move(c));
}

// Morse counts against Betti numbers: inequalities in every dimension and
// equal alternating sums.
void morse_checks(Json& checks, const MorseVector& mv, const BettiVector& b) {
    const int top = std::max(static_cast<int>(mv.values.size()), static_cast<int>(b.values.size())) - 2;
    std::string bad;
    for (int d = -1; d <= top; ++d)
        if (mv.at(d) < b.at(d) && bad.empty()) bad = "dimension " + std::to_string(d);
    add_check(checks, "morse_inequalities", bad.empty(), bad);
    long long chi = 0;
    for (int d = -1; d <= b.top_dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * b.at(d);
    add_check(checks, "euler_characteristic", mv.alternating_sum() == chi);
}

std::string join_ints(const Json& arr, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(arr[i].get<long long>());
    }
    return out;
}

std::string join_strings(const Json& arr, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) out += sep;
        out += arr[i].get<std::string>();
    }
    return out;
}

std::string interval_text(const Json& arr) {
    std::string out = "{";
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) out += ",";
        out += "[" + std::to_string(arr[i][0].get<int>()) + "," + std::to_string(arr[i][1].get<int>()) + "]";
    }
    return out + "}";
}

void checks_text(std::ostream& os, const Json& r) {
    os << "checks:\n";
    for (const auto& c : r["checks"]) {
        os << "  " << (c["pass"].get<bool>() ? "pass" : "FAIL") << "  " << c["name"].get<std::string>();
        if (c.contains("detail")) os << " (" << c["detail"].get<std::string>() << ")";
        os << "\n";
    }
    os << "status: " << r["status"].get<std::string>() << "\n";
}

void finish(Json& r) {
    bool ok = std::all_of(r["checks"].begin(), r["checks"].end(), [](const Json& c) { return c["pass"].get<bool>(); });
    r["status"] = ok ? "pass" : "violation";
}

}  // namespace

bool report_passes(const Json& r) { return !r.contains("status") || r["status"] == "pass"; }

Json analyze_report(const Poset& p, const EdgeLabeling& labels, const Limits& lim) {
    Json r;
    r["command"] = "analyze";
    const FacetOrder fo = order_facets(p, labels, lim.max_faces);
    const auto systems = interval_systems(fo);
    const AcyclicMatching m = build_matching(fo, systems, lim.max_faces);
    const auto& fx = m.faces();
    r["poset"] = {{"elements", p.size()}, {"covers", p.cover_count()}, {"facets", fo.size()}};

    Json checks = Json::array();
    std::vector<std::size_t> per_fibre(fo.size(), 0);
    for (std::size_t c : m.critical()) ++per_fibre[fx.fibre(c)];

    Json facets = Json::array();
    bool fibres_ok = true;
    for (std::size_t j = 0; j < fo.size(); ++j) {
        const auto& sys = systems[j];
        Json f;
        f["index"] = j + 1;
        f["chain"] = ids(p, fo.facets[j].elements);
        Json lab = Json::array();
        for (const auto& t : fo.labels[j]) lab.push_back(format_token(t));
        f["labels"] = lab;
        f["I"] = intervals(sys.I);
        f["J"] = intervals(sys.J);
        f["j0"] = sys.j0;
        if (auto face = expected_critical_face(fo, sys)) {
            f["critical"] = {{"face", ids(p, *face)}, {"dimension", face_dimension(*face)}};
            auto found = fx.find(*face);
            if (per_fibre[j] != 1 || !found || !m.is_critical(*found) || fx.fibre(*found) != j) fibres_ok = false;
        } else {
            f["critical"] = nullptr;
            if (per_fibre[j] != 0) fibres_ok = false;
        }
        facets.push_back(std::move(f));
    }
    r["facets"] = std::move(facets);

    Json crit = Json::array();
    for (std::size_t c : m.critical())
        crit.push_back({{"facet", fx.fibre(c) + 1}, {"face", ids(p, fx.face(c))}, {"dimension", fx.dim(c)}});
    r["critical_cells"] = std::move(crit);

    const MorseVector mv = morse_vector(m);
    r["morse_vector"] = {{"reduced", counts(mv.values)}, {"unreduced", counts(unreduced_counts(mv).values)}};

    const auto complex = order_complex(p, lim.max_faces);
    const BettiVector betti = reduced_betti(complex);
    const BettiVector betti2 = reduced_betti(complex, Coefficients::Mod2);
    r["betti"] = {{"rational", counts(betti.values)}, {"mod2", counts(betti2.values)}};

    const long long mu_rec = mobius_recursive(p);
    const long long mu_morse = mobius_from_morse(m, systems);
    const long long chi = euler_characteristic(complex);
    r["mobius"] = {{"recursive", mu_rec}, {"morse", mu_morse}, {"euler", chi}};

    const auto verdict = is_lex_shelling(systems);
    Json sh;
    sh["is_shelling"] = verdict.is_shelling;
    if (!verdict.is_shelling) {
        sh["facet"] = *verdict.facet + 1;
        sh["interval"] = {verdict.interval->lo, verdict.interval->hi};
    }
    r["shelling"] = sh;

    add_check(checks, "valid_matching", is_valid_matching(m));
    auto cycle = find_directed_cycle(m);
    add_check(checks, "acyclic", !cycle, cycle ? "cycle through " + std::to_string(cycle->size()) + " faces" : "");
    auto lex = validate_lex_axiom(fo);
    add_check(checks, "lex_order_axiom", !lex,
              lex ? "facets " + std::to_string(lex->first + 1) + " and " + std::to_string(lex->second + 1) : "");
    add_check(checks, "one_critical_per_fibre", fibres_ok);
    add_check(checks, "mobius_agreement", mu_rec == mu_morse && mu_morse == chi);
    morse_checks(checks, mv, betti);
    std::string overlap_bad;
    for (std::size_t j = 1; j < fo.size() && overlap_bad.empty(); ++j) {
        try {
            overlap_type(fo, j);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::UnexpectedHomology) throw;
            overlap_bad = "facet " + std::to_string(j + 1);
        }
    }
    add_check(checks, "overlap_sphere_or_acyclic", overlap_bad.empty(), overlap_bad);
    if (verdict.is_shelling) {
        std::vector<Face> interiors;
        for (const auto& f : fo.facets) interiors.emplace_back(f.interior().begin(), f.interior().end());
        const AcyclicMatching sm = shelling_matching(interiors);
        add_check(checks, "shelling_matching_agrees",
                  sm.critical_faces() == m.critical_faces() && morse_vector(sm) == mv);
    }
    r["checks"] = std::move(checks);
    finish(r);
    return r;
}

std::string analyze_text(const Json& r) {
    std::ostringstream os;
    const auto& ps = r["poset"];
    os << "poset: " << ps["elements"] << " elements, " << ps["covers"] << " covers, " << ps["facets"] << " facets\n";
    os << "facet order:\n";
    for (const auto& f : r["facets"]) {
        os << "  F" << f["index"] << "  " << join_strings(f["chain"], " < ") << "\n";
        os << "      labels (" << join_strings(f["labels"], ",") << ")  I " << interval_text(f["I"]) << "  J "
           << interval_text(f["J"]) << "  j0 {" << join_ints(f["j0"], ",") << "}";
        if (!f["critical"].is_null())
            os << "  critical {" << join_strings(f["critical"]["face"], ", ") << "} dim " << f["critical"]["dimension"];
        os << "\n";
    }
    os << "critical cells: " << r["critical_cells"].size() << "\n";
    for (const auto& c : r["critical_cells"])
        os << "  F" << c["facet"] << "  {" << join_strings(c["face"], ", ") << "}  dim " << c["dimension"] << "\n";
    os << "morse vector (dims -1..): " << join_ints(r["morse_vector"]["reduced"]) << "\n";
    os << "unreduced counts (dims -1..): " << join_ints(r["morse_vector"]["unreduced"]) << "\n";
    os << "reduced betti over Q (dims -1..): " << join_ints(r["betti"]["rational"]) << "\n";
    os << "reduced betti mod 2 (dims -1..): " << join_ints(r["betti"]["mod2"]) << "\n";
    const auto& mu = r["mobius"];
    os << "mobius: recursive " << mu["recursive"] << ", morse " << mu["morse"] << ", euler " << mu["euler"] << "\n";
    const auto& sh = r["shelling"];
    os << "shelling: " << (sh["is_shelling"].get<bool>() ? "true" : "false");
    if (!sh["is_shelling"].get<bool>())
        os << " (facet " << sh["facet"] << " skips [" << sh["interval"][0] << "," << sh["interval"][1] << "])";
    os << "\n";
    checks_text(os, r);
    return os.str();
}

namespace {

Json bar_cell(const MultisetPoset& mp, const FacetOrder& fo, const FaceIndex& fx, std::size_t c) {
    const std::size_t j = fx.fibre(c);
    Json out;
    out["facet"] = j + 1;
    out["chain"] = format_bar_notation(mp, fo.facets[j]);
    out["face"] = ids(mp.poset(), fx.face(c));
    out["dimension"] = fx.dim(c);
    return out;
}

void require_size(const MultisetRequest& req) {
    int n = 0;
    for (int m : req.multiplicities) n += m;
    if (n > req.max_n)
        throw Error(ErrorCode::BoundExceeded, "n = " + std::to_string(n) + " exceeds --max-n " + std::to_string(req.max_n));
}

}  // namespace

Json multiset_report(const MultisetRequest& req, const Limits& lim) {
    require_size(req);
    const MultisetPoset mp(req.multiplicities, lim.max_faces);
    Json r;
    r["command"] = "multiset";
    static const char* names[] = {"report", "cancel", "mobius", "homology"};
    r["subcommand"] = names[static_cast<int>(req.command)];
    r["lambda"] = format_lambda(mp.multiplicities());
    r["n"] = mp.n();
    r["hook"] = mp.hook();
    r["elements"] = mp.poset().size();
    Json checks = Json::array();

    switch (req.command) {
    case MultisetCommand::Report: {
        const FacetOrder fo = multiset_facet_order(mp, lim.max_faces);
        const auto systems = interval_systems(fo);
        const AcyclicMatching m = build_matching(fo, systems, lim.max_faces);
        r["facets"] = fo.size();
        r["morse_vector"] = counts(morse_vector(m).values);
        Json crit = Json::array();
        for (std::size_t c : m.critical()) {
            Json cell = bar_cell(mp, fo, m.faces(), c);
            cell["J"] = intervals(systems[m.faces().fibre(c)].J);
            crit.push_back(std::move(cell));
        }
        r["critical_cells"] = std::move(crit);
        add_check(checks, "acyclic", is_acyclic(m));
        break;
    }
    case MultisetCommand::Cancel: {
        CancellationOptions opts;
        opts.force = req.force;
        opts.max_faces = lim.max_faces;
        const auto rep = cancel_all_lower(mp, opts);
        const auto& fx = rep.initial->faces();
        r["facets"] = rep.facet_count;
        r["top_dimension"] = rep.top_dimension;
        r["morse_before"] = counts(rep.before.values);
        Json pairs = Json::array();
        bool unique = true, acyclic = true;
        for (const auto& cp : rep.pairs) {
            Json pj;
            pj["upper"] = bar_cell(mp, rep.order, fx, cp.upper);
            pj["lower"] = bar_cell(mp, rep.order, fx, cp.lower);
            pj["agreement"] = cp.agreement;
            pj["paths"] = cp.path_count;
            pj["deleted_ranks"] = cp.path.deleted_ranks;
            pj["predicted"] = cp.predicted ? Json(std::string(to_string(*cp.predicted))) : Json(nullptr);
            pj["acyclic_after"] = cp.acyclic_after;
            unique = unique && cp.path_count == 1;
            acyclic = acyclic && cp.acyclic_after;
            pairs.push_back(std::move(pj));
        }
        r["pairs"] = std::move(pairs);
        r["morse_after"] = counts(rep.after.values);
        Json surv = Json::array();
        bool concentrated = true;
        for (std::size_t c : rep.survivors) {
            surv.push_back(bar_cell(mp, rep.order, fx, c));
            concentrated = concentrated && fx.dim(c) == rep.top_dimension;
        }
        r["survivors"] = std::move(surv);
        r["issues"] = rep.issues;
        const BettiVector b = reduced_betti(order_complex(mp.poset(), lim.max_faces));
        r["betti"] = counts(b.values);
        const auto count = rep.survivors.size();
        r["summary"] = count == 0 ? std::string("0 surviving critical cells; collapsible")
                                  : std::to_string(count) + " surviving critical cells" +
                                        (concentrated ? " in dimension " + std::to_string(rep.top_dimension) : "");
        add_check(checks, "unique_gradient_paths", unique);
        add_check(checks, "acyclic_after_each_cancel", acyclic);
        morse_checks(checks, rep.after, b);
        if (rep.hook) {
            add_check(checks, "survivors_in_top_dimension", concentrated);
            add_check(checks, "survivors_match_betti", static_cast<long long>(count) == b.at(rep.top_dimension));
        }
        break;
    }
    case MultisetCommand::Mobius: {
        const long long mu = mobius_recursive(mp.poset());
        r["mobius_recursive"] = mu;
        try {
            const FacetOrder fo = multiset_facet_order(mp, lim.max_faces);
            const auto systems = interval_systems(fo);
            const long long mm = mobius_from_morse(build_matching(fo, systems, lim.max_faces), systems);
            r["mobius_morse"] = mm;
            add_check(checks, "mobius_agreement", mm == mu);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::BoundExceeded) throw;
            r["mobius_morse"] = nullptr;
        }
        if (mp.hook()) {
            const bool predicted_zero = hook_mobius_predicate(mp.multiplicities());
            r["hook_predicate_zero"] = predicted_zero;
            r["predicate_matches"] = predicted_zero == (mu == 0);
        }
        break;
    }
    case MultisetCommand::Homology: {
        const auto complex = order_complex(mp.poset(), lim.max_faces);
        r["faces"] = complex.face_count();
        r["betti"] = {{"rational", counts(reduced_betti(complex).values)},
                      {"mod2", counts(reduced_betti(complex, Coefficients::Mod2).values)}};
        r["euler"] = euler_characteristic(complex);
        break;
    }
    }
    r["checks"] = std::move(checks);
    finish(r);
    return r;
}

std::string multiset_text(const Json& r) {
    std::ostringstream os;
    os << "multiset poset " << r["lambda"].get<std::string>() << ": n = " << r["n"] << ", " << r["elements"]
       << " elements" << (r["hook"].get<bool>() ? ", hook" : "") << "\n";
    const std::string sub = r["subcommand"];
    auto cell = [](const Json& c) {
        return "F" + std::to_string(c["facet"].get<std::size_t>()) + " dim " + std::to_string(c["dimension"].get<int>()) +
               "  " + c["chain"].get<std::string>();
    };
    if (sub == "report") {
        os << "facets: " << r["facets"] << "\n";
        os << "morse vector (dims -1..): " << join_ints(r["morse_vector"]) << "\n";
        os << "critical cells:\n";
        for (const auto& c : r["critical_cells"]) os << "  " << cell(c) << "  J " << interval_text(c["J"]) << "\n";
    } else if (sub == "cancel") {
        os << "facets: " << r["facets"] << "\n";
        os << "morse vector before (dims -1..): " << join_ints(r["morse_before"]) << "\n";
        os << "cancelled pairs: " << r["pairs"].size() << "\n";
        for (const auto& p : r["pairs"]) {
            os << "  " << cell(p["upper"]) << "\n    with " << cell(p["lower"]) << "\n    paths " << p["paths"]
               << ", deleted ranks [" << join_ints(p["deleted_ranks"], ",") << "], agreement " << p["agreement"];
            if (!p["predicted"].is_null()) os << ", predicted " << p["predicted"].get<std::string>();
            os << "\n";
        }
        os << "morse vector after (dims -1..): " << join_ints(r["morse_after"]) << "\n";
        os << "reduced betti over Q (dims -1..): " << join_ints(r["betti"]) << "\n";
        for (const auto& s : r["survivors"]) os << "  survivor " << cell(s) << "\n";
        for (const auto& i : r["issues"]) os << "  issue: " << i.get<std::string>() << "\n";
        os << r["summary"].get<std::string>() << "\n";
    } else if (sub == "mobius") {
        os << "mobius: recursive " << r["mobius_recursive"];
        if (!r["mobius_morse"].is_null()) os << ", morse " << r["mobius_morse"];
        os << "\n";
        if (r.contains("hook_predicate_zero"))
            os << "hook criterion predicts " << (r["hook_predicate_zero"].get<bool>() ? "mu = 0" : "mu != 0") << ": "
               << (r["predicate_matches"].get<bool>() ? "matches" : "does not match") << "\n";
    } else {
        os << "faces: " << r["faces"] << "\n";
        os << "reduced betti over Q (dims -1..): " << join_ints(r["betti"]["rational"]) << "\n";
        os << "reduced betti mod 2 (dims -1..): " << join_ints(r["betti"]["mod2"]) << "\n";
        os << "reduced euler characteristic: " << r["euler"] << "\n";
    }
    checks_text(os, r);
    return os.str();
}

Json puzzle_report(const PuzzleOptions& opts) {
    const auto rep = puzzle_search(opts);
    Json r;
    r["command"] = "puzzle";
    r["max_total"] = opts.max_total;
    r["max_parts"] = opts.max_parts;
    r["distinct"] = opts.distinct;
    r["candidates"] = rep.candidates;
    r["count"] = rep.solutions.size();
    Json sols = Json::array();
    for (const auto& s : rep.solutions)
        sols.push_back({{"n", s.n}, {"b", s.b}, {"c", {s.c.first, s.c.second}}, {"blocks", s.blocks}});
    r["solutions"] = std::move(sols);
    // Found solutions are a result, not a failed check.
    r["checks"] = Json::array();
    r["status"] = "pass";
    return r;
}

std::string puzzle_text(const Json& r) {
    std::ostringstream os;
    os << "puzzle search: max total " << r["max_total"] << ", max parts " << r["max_parts"]
       << (r["distinct"].get<bool>() ? ", distinct" : "") << "\n";
    os << "candidates searched: " << r["candidates"] << "\n";
    os << r["count"] << " solutions\n";
    for (const auto& s : r["solutions"]) os << "  " << s.dump() << "\n";
    return os.str();
}

}  // namespace lexmorse::cli
