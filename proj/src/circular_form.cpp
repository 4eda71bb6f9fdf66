#include "pdcalc/circular_form.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <string_view>

namespace pdcalc {

namespace {


// Tree-encoding order with '(' ranked above ')': the descending sort then
// keeps "(...)" ahead of "()", the convention all canonical encodings use.
bool tree_greater(const std::string& a, const std::string& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] == '(';
    return a.size() > b.size();
}

struct TreeGreater {
    bool operator()(const std::string& a, const std::string& b) const {
        return tree_greater(a, b);
    }
};

// Splits a canonical forest encoding into its top-level balanced groups.
std::vector<std::string_view> top_level_groups(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') {
            if (depth == 0) start = i;
            ++depth;
        } else {
            --depth;
            if (depth == 0) out.push_back(s.substr(start, i - start + 1));
        }
    }
    return out;
}

std::string parse_tree(std::string_view s, std::size_t base_offset);

// Canonicalizes a sequence of groups: parse each, sort descending, concatenate.
std::vector<std::string> parse_groups(std::string_view s, std::size_t base_offset) {
    std::vector<std::string> trees;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') {
            if (depth == 0) start = i;
            ++depth;
        } else if (c == ')') {
            if (depth == 0) throw parse_error("unmatched ')'", base_offset + i);
            --depth;
            if (depth == 0) trees.push_back(parse_tree(s.substr(start, i - start + 1), base_offset + start));
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            throw parse_error("unexpected character in circular form", base_offset + i);
        }
    }
    if (depth != 0) throw parse_error("unbalanced nesting", base_offset + s.size());
    std::sort(trees.begin(), trees.end(), TreeGreater{});
    return trees;
}

std::string parse_tree(std::string_view s, std::size_t base_offset) {
    auto children = parse_groups(s.substr(1, s.size() - 2), base_offset + 1);
    std::string enc = "(";
    for (const auto& c : children) enc += c;
    enc += ")";
    return enc;
}

} // namespace

CircularForm CircularForm::parse(std::string_view text) {
    // the empty diagram may be written as "∅" (U+2205) or as the empty string
    if (text == "\xE2\x88\x85") return {};
    CircularForm u;
    u.trees_ = parse_groups(text, 0);
    return u;
}

CircularForm CircularForm::wrap(const CircularForm& u) {
    CircularForm r;
    std::string enc = "(";
    for (const auto& t : u.trees_) enc += t;
    enc += ")";
    r.trees_.push_back(std::move(enc));
    return r;
}

CircularForm operator*(const CircularForm& a, const CircularForm& b) {
    CircularForm r;
    r.trees_.reserve(a.trees_.size() + b.trees_.size());
    std::merge(a.trees_.begin(), a.trees_.end(), b.trees_.begin(), b.trees_.end(),
               std::back_inserter(r.trees_), TreeGreater{});
    return r;
}

int CircularForm::circle_count() const {
    int n = 0;
    for (const auto& t : trees_) n += static_cast<int>(std::count(t.begin(), t.end(), '('));
    return n;
}

std::string CircularForm::encode() const {
    std::string out;
    for (const auto& t : trees_) out += t;
    return out;
}

Forest forest_of(const CircularForm& u) {
    std::function<TreeNode(std::string_view)> node_of = [&](std::string_view enc) {
        TreeNode n;
        for (auto g : top_level_groups(enc.substr(1, enc.size() - 2))) n.children.push_back(node_of(g));
        return n;
    };
    Forest f;
    for (const auto& t : u.trees_) f.push_back(node_of(t));
    return f;
}

CircularForm circles_of(const Forest& f) {
    std::function<std::string(const TreeNode&)> enc_of = [&](const TreeNode& n) {
        std::vector<std::string> kids;
        for (const auto& c : n.children) kids.push_back(enc_of(c));
        std::sort(kids.begin(), kids.end(), TreeGreater{});
        std::string enc = "(";
        for (const auto& k : kids) enc += k;
        enc += ")";
        return enc;
    };
    CircularForm u;
    for (const auto& t : f) u.trees_.push_back(enc_of(t));
    std::sort(u.trees_.begin(), u.trees_.end(), TreeGreater{});
    return u;
}

namespace {

// Canonical tree encodings by node count, memoized.
const std::vector<std::string>& trees_of_size(int n) {
    static std::map<int, std::vector<std::string>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<std::string> out;
    if (n >= 1) {
        // a tree of size n is a root around a forest of size n-1
        std::vector<std::vector<std::string>> forests;
        std::function<void(int, const std::string*, std::vector<std::string>&)> gen =
            [&](int remaining, const std::string* max_enc, std::vector<std::string>& acc) {
                if (remaining == 0) {
                    forests.push_back(acc);
                    return;
                }
                for (int s = remaining; s >= 1; --s) {
                    for (const auto& t : trees_of_size(s)) {
                        if (max_enc && tree_greater(t, *max_enc)) continue; // keep descending order
                        acc.push_back(t);
                        gen(remaining - s, &t, acc);
                        acc.pop_back();
                    }
                }
            };
        std::vector<std::string> acc;
        gen(n - 1, nullptr, acc);
        for (const auto& f : forests) {
            std::string enc = "(";
            for (const auto& t : f) enc += t;
            enc += ")";
            out.push_back(std::move(enc));
        }
        std::sort(out.begin(), out.end(), TreeGreater{});
    }
    return cache.emplace(n, std::move(out)).first->second;
}

} // namespace

std::vector<CircularForm> enumerate_circular_forms(int c, int bound) {
    if (c < 0) throw validation_error("negative circle count");
    if (c > bound) throw bound_error("circle count " + std::to_string(c) +
                                     " exceeds bound " + std::to_string(bound));
    std::vector<std::string> encs;
    std::function<void(int, const std::string*, std::string&)> gen =
        [&](int remaining, const std::string* max_enc, std::string& acc) {
            if (remaining == 0) {
                encs.push_back(acc);
                return;
            }
            for (int s = remaining; s >= 1; --s) {
                for (const auto& t : trees_of_size(s)) {
                    if (max_enc && tree_greater(t, *max_enc)) continue;
                    std::size_t len = acc.size();
                    acc += t;
                    gen(remaining - s, &t, acc);
                    acc.resize(len);
                }
            }
        };
    std::string acc;
    gen(c, nullptr, acc);
    std::sort(encs.begin(), encs.end(), TreeGreater{});
    std::vector<CircularForm> out;
    out.reserve(encs.size());
    for (const auto& e : encs) out.push_back(CircularForm::parse(e));
    return out;
}

CircularForm spherical_canonical(const CircularForm& u) {
    if (u.is_empty()) return u;
    // Region tree on the sphere: vertex 0 is the infinity face, one vertex per
    // circle, edges join a circle to its enclosing region's vertex.
    std::vector<std::vector<int>> adj(1);
    std::function<void(std::string_view, int)> build = [&](std::string_view forest_enc, int parent) {
        for (auto g : top_level_groups(forest_enc)) {
            int v = static_cast<int>(adj.size());
            adj.emplace_back();
            adj[parent].push_back(v);
            adj[v].push_back(parent);
            build(g.substr(1, g.size() - 2), v);
        }
    };
    build(u.encode(), 0);

    std::function<std::string(int, int)> enc_subtree = [&](int v, int parent) {
        std::vector<std::string> kids;
        for (int w : adj[v])
            if (w != parent) kids.push_back(enc_subtree(w, v));
        std::sort(kids.begin(), kids.end(), TreeGreater{});
        std::string enc = "(";
        for (const auto& k : kids) enc += k;
        enc += ")";
        return enc;
    };

    std::string best;
    bool have = false;
    for (int root = 0; root < static_cast<int>(adj.size()); ++root) {
        std::vector<std::string> kids;
        for (int w : adj[root]) kids.push_back(enc_subtree(w, root));
        std::sort(kids.begin(), kids.end(), TreeGreater{});
        std::string enc;
        for (const auto& k : kids) enc += k;
        if (!have || enc < best) {
            best = std::move(enc);
            have = true;
        }
    }
    return CircularForm::parse(best);
}

} // namespace pdcalc
