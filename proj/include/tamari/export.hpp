#pragma once

#include "tamari/poset.hpp"
#include "tamari/series.hpp"

#include <map>
#include <ostream>
#include <sstream>
#include <string>

namespace tamari {

/// Hasse diagram in DOT format; nodes are labeled by their binary words.
inline void write_dot(std::ostream& os, const CoverGraph& g) {
    os << "digraph hasse {\n";
    os << "  label=\"" << to_string(g.flavor) << " m=" << g.m << " n=" << g.n << "\";\n";
    os << "  rankdir=BT;\n";
    for (const auto& w : g.nodes) os << "  \"" << w.to_string() << "\";\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        for (int j : g.covers[i])
            os << "  \"" << g.nodes[i].to_string() << "\" -> \""
               << g.nodes[static_cast<std::size_t>(j)].to_string() << "\";\n";
    os << "}\n";
}

inline std::string path_json(const DyckWord& w) {
    return "{\"m\":" + std::to_string(w.m()) + ",\"word\":\"" + w.to_string() + "\"}";
}

inline std::string record_json(const IntervalRecord& r) {
    std::string s = "{\"lower\":" + path_json(r.lower) + ",\"upper\":" + path_json(r.upper);
    s += ",\"d_upper\":" + std::to_string(r.d_upper);
    s += ",\"contacts_lower\":" + std::to_string(r.contacts_lower);
    s += ",\"first_ascent_upper\":" + std::to_string(r.first_ascent_upper);
    s += ",\"ascent_profile_upper\":[";
    bool first = true;
    for (auto [len, mult] : r.ascent_profile_upper) {
        s += (first ? "" : ",") + ("[" + std::to_string(len) + "," +
                                   std::to_string(mult) + "]");
        first = false;
    }
    s += "]";
    if (r.chain_length >= 0) s += ",\"chain\":" + std::to_string(r.chain_length);
    return s + "}";
}

/// One JSON line per interval of the poset, in (lower, upper) index order.
inline void write_interval_json(std::ostream& os, const CoverGraph& g,
                                const Reachability& reach, bool with_chains = false) {
    std::vector<int> chains;
    int chains_src = -1;
    reach.for_each_interval([&](int v, int w) {
        IntervalRecord r = make_record(g, v, w);
        if (with_chains) {
            if (chains_src != v) {
                chains = longest_chains_from(g, v);
                chains_src = v;
            }
            r.chain_length = chains[static_cast<std::size_t>(w)];
        }
        os << record_json(r) << "\n";
    });
}

/// CSV with columns statistic,value,count.
template <class Key>
inline void write_histogram_csv(std::ostream& os, const std::string& statistic,
                                const std::map<Key, Int>& hist) {
    os << "statistic,value,count\n";
    for (const auto& [k, c] : hist) os << statistic << "," << k << "," << c << "\n";
}

/// Series as JSON: per t-order, an array of [[ex,eq,ez,eu], "p/q"] pairs in
/// ascending exponent order.
inline std::string series_json(const TSeries& s) {
    std::string out = "[";
    for (int n = 0; n < s.order(); ++n) {
        out += n ? ",[" : "[";
        bool first = true;
        for (const auto& [e, c] : s.coeff(n).terms()) {
            std::ostringstream cs;
            cs << c;
            out += (first ? "" : ",");
            out += "[[" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," +
                   std::to_string(e[2]) + "," + std::to_string(e[3]) + "],\"" + cs.str() +
                   "\"]";
            first = false;
        }
        out += "]";
    }
    return out + "]";
}

} // namespace tamari
