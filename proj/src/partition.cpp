#include "fpoly/partition.hpp"

#include <algorithm>
#include <sstream>

#include "fpoly/errors.hpp"

namespace fpoly {

bool Partition::has_dash() const {
    return std::find(entries.begin(), entries.end(), kDash) != entries.end();
}

int Partition::part_count() const {
    std::vector<int> seen;
    for (int e : entries) {
        if (e == kDash) continue;
        if (std::find(seen.begin(), seen.end(), e) == seen.end()) seen.push_back(e);
    }
    return static_cast<int>(seen.size());
}

bool Partition::is_canonical() const {
    int max_seen = 0;
    for (int e : entries) {
        if (e == kDash) continue;
        if (e < 1 || e > max_seen + 1) return false;
        max_seen = std::max(max_seen, e);
    }
    return true;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ",";
        if (entries[i] == kDash) {
            os << "-";
        } else {
            os << entries[i];
        }
    }
    os << ")";
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    std::string body = text;
    // tolerate surrounding whitespace; strip outer parentheses if present
    auto strip = [](std::string s) {
        std::size_t a = s.find_first_not_of(" \t");
        std::size_t b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    body = strip(body);
    if (!body.empty() && body.front() == '(' && body.back() == ')') {
        body = body.substr(1, body.size() - 2);
    }
    Partition p;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = strip(item);
        if (item == "-") {
            p.entries.push_back(kDash);
        } else {
            try {
                std::size_t pos = 0;
                int v = std::stoi(item, &pos);
                if (pos != item.size()) throw std::invalid_argument(item);
                p.entries.push_back(v);
            } catch (const std::exception&) {
                throw InvalidEntry("bad partition entry '" + item + "' in " + text);
            }
        }
    }
    if (p.entries.empty()) throw InvalidEntry("empty partition text: " + text);
    return p;
}

Partition canonicalize(const Partition& p) {
    const int m = p.m();
    for (int e : p.entries) {
        if (e != kDash && (e < 1 || e > m)) {
            throw InvalidEntry("part label " + std::to_string(e) + " outside 1.." + std::to_string(m));
        }
    }
    std::vector<int> relabel(static_cast<std::size_t>(m) + 1, 0);
    int next = 0;
    Partition out;
    out.entries.reserve(p.entries.size());
    for (int e : p.entries) {
        if (e == kDash) {
            out.entries.push_back(kDash);
        } else {
            if (relabel[e] == 0) relabel[e] = ++next;
            out.entries.push_back(relabel[e]);
        }
    }
    return out;
}

std::vector<Partition> enumerate_A(int m) {
    std::vector<Partition> out;
    for (int l = 1; l <= m; ++l) {
        for (int k = l + 1; k <= m; ++k) {
            Partition p;
            p.entries.assign(static_cast<std::size_t>(m), 0);
            int label = 0;
            for (int v = 1; v <= m; ++v) {
                if (v == k) {
                    p.entries[v - 1] = p.entries[l - 1];
                } else {
                    p.entries[v - 1] = ++label;
                }
            }
            out.push_back(canonicalize(p));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> enumerate_B(int m) {
    std::vector<Partition> out;
    // the part not containing vertex 1, as a nonempty subset of {2..m}
    for (unsigned mask = 1; mask < (1u << (m - 1)); ++mask) {
        Partition p;
        p.entries.assign(static_cast<std::size_t>(m), 1);
        for (int v = 2; v <= m; ++v) {
            if (mask & (1u << (v - 2))) p.entries[v - 1] = 2;
        }
        out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<int, int> paired_vertices(const Partition& a) {
    const int m = a.m();
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (a.entries[i] != kDash && a.entries[i] == a.entries[j]) return {i + 1, j + 1};
        }
    }
    throw InvalidEntry("partition " + a.str() + " has no part of size 2");
}

bool is_forbidden(const ABPair& pair) {
    auto [l, k] = paired_vertices(pair.A);
    return pair.B.entries[l - 1] == pair.B.entries[k - 1];
}

}  // namespace fpoly
