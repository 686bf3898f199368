#include "selmat/combinat.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace selmat {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts)
{
    for (int p : parts)
        if (p < 0) throw std::invalid_argument("negative part in partition");
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    parts_ = std::move(parts);
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int v) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

std::string to_string(const Partition& p)
{
    if (p.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < p.parts().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

Partition parse_partition(const std::string& text)
{
    if (text.empty() || text == "0") return Partition();
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad partition: " + text);
        int v = std::stoi(item);
        if (v <= 0) throw std::invalid_argument("bad partition: " + text);
        parts.push_back(v);
    }
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
        throw std::invalid_argument("partition parts must be weakly decreasing: " + text);
    return Partition(parts);
}

bool revlex_before(const Partition& a, const Partition& b)
{
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(), a.parts().begin(), a.parts().end());
}

std::vector<Partition> partitions_of(int k)
{
    if (k < 0) throw std::invalid_argument("negative weight");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(k, k);
    return out;
}

bool dominance_leq(const Partition& mu, const Partition& lambda)
{
    if (mu.weight() != lambda.weight()) throw UnequalWeight("dominance needs equal weights");
    int sm = 0, sl = 0;
    int len = std::max(mu.length(), lambda.length());
    for (int i = 0; i < len; ++i) {
        sm += mu[i];
        sl += lambda[i];
        if (sm > sl) return false;
    }
    return true;
}

Rational z_lambda(const Partition& mu)
{
    Rational z(1);
    std::map<int, int> mult;
    for (int p : mu.parts()) ++mult[p];
    for (auto [part, m] : mult) z *= power(Rational(part), m) * factorial(m);
    return z;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    std::vector<int> seen(images_.size() + 1, 0);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[v]++)
            throw std::invalid_argument("image list is not a permutation");
    }
}

Permutation Permutation::identity(int k)
{
    std::vector<int> im(k);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(im);
}

Permutation Permutation::from_cycles(int k, const std::vector<std::vector<int>>& cycles)
{
    std::vector<int> im(k);
    std::iota(im.begin(), im.end(), 1);
    for (const auto& c : cycles)
        for (size_t i = 0; i < c.size(); ++i) im[c[i] - 1] = c[(i + 1) % c.size()];
    return Permutation(im);
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(images_.size());
    for (size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(inv);
}

Permutation operator*(const Permutation& a, const Permutation& b)
{
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<int> im(a.degree());
    for (int x = 1; x <= a.degree(); ++x) im[x - 1] = a(b(x));
    return Permutation(im);
}

std::string to_string(const Permutation& p)
{
    std::string out;
    std::vector<bool> seen(p.degree() + 1, false);
    for (int s = 1; s <= p.degree(); ++s) {
        if (seen[s] || p(s) == s) continue;
        out += '(';
        for (int x = s; !seen[x]; x = p(x)) {
            if (x != s) out += ' ';
            out += std::to_string(x);
            seen[x] = true;
        }
        out += ')';
    }
    return out.empty() ? "e" : out;
}

std::vector<Permutation> all_permutations(int k)
{
    std::vector<int> im(k);
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

Partition cycle_type(const Permutation& pi)
{
    std::vector<int> lengths;
    std::vector<bool> seen(pi.degree() + 1, false);
    for (int s = 1; s <= pi.degree(); ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (int x = s; !seen[x]; x = pi(x)) {
            seen[x] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition(lengths);
}

Partition coset_type(const Permutation& sigma)
{
    int n = sigma.degree();
    if (n % 2) throw std::invalid_argument("coset type needs even degree");
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (int i = 1; i <= n / 2; ++i) {
        unite(2 * i - 1, 2 * i);
        unite(sigma(2 * i - 1), sigma(2 * i));
    }
    std::map<int, int> size;
    for (int v = 1; v <= n; ++v) ++size[find(v)];
    std::vector<int> parts;
    for (auto [root, s] : size) parts.push_back(s / 2);
    return Partition(parts);
}

Permutation PairPartition::as_permutation() const
{
    std::vector<int> im;
    for (auto [a, b] : pairs) {
        im.push_back(a);
        im.push_back(b);
    }
    return Permutation(im);
}

std::vector<PairPartition> pair_partitions(int k)
{
    std::vector<PairPartition> out;
    PairPartition cur;
    std::vector<bool> used(2 * k + 1, false);
    std::function<void()> rec = [&]() {
        int first = 1;
        while (first <= 2 * k && used[first]) ++first;
        if (first > 2 * k) {
            out.push_back(cur);
            return;
        }
        used[first] = true;
        for (int second = first + 1; second <= 2 * k; ++second) {
            if (used[second]) continue;
            used[second] = true;
            cur.pairs.emplace_back(first, second);
            rec();
            cur.pairs.pop_back();
            used[second] = false;
        }
        used[first] = false;
    };
    rec();
    return out;
}

std::vector<Permutation> hyperoctahedral(int k)
{
    // block permutation p of the pairs, then an optional swap inside each pair
    std::vector<Permutation> out;
    for (const auto& p : all_permutations(k)) {
        for (int mask = 0; mask < (1 << k); ++mask) {
            std::vector<int> im(2 * k);
            for (int i = 1; i <= k; ++i) {
                bool swap = (mask >> (i - 1)) & 1;
                im[2 * i - 2] = 2 * p(i) - (swap ? 0 : 1);
                im[2 * i - 1] = 2 * p(i) - (swap ? 1 : 0);
            }
            out.emplace_back(im);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::mutex character_mutex;
std::map<std::pair<Partition, Partition>, int> character_memo;

// Murnaghan-Nakayama on beta-sets: remove rim hooks of size mu[0]
int mn_character(const Partition& lambda, const Partition& mu)
{
    if (mu.empty()) return 1;
    {
        std::lock_guard<std::mutex> lock(character_mutex);
        auto it = character_memo.find({lambda, mu});
        if (it != character_memo.end()) return it->second;
    }
    int r = mu.parts()[0];
    Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
    int len = lambda.length();
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
    std::set<int> betas(beta.begin(), beta.end());

    int total = 0;
    for (int b : beta) {
        int target = b - r;
        if (target < 0 || betas.count(target)) continue;
        int between = 0;
        for (int c : beta)
            if (c > target && c < b) ++between;
        std::vector<int> nb;
        for (int c : beta) nb.push_back(c == b ? target : c);
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> parts(len);
        for (int i = 0; i < len; ++i) parts[i] = nb[i] - (len - 1 - i);
        int sign = (between % 2) ? -1 : 1;
        total += sign * mn_character(Partition(parts), rest);
    }
    std::lock_guard<std::mutex> lock(character_mutex);
    character_memo.emplace(std::make_pair(lambda, mu), total);
    return total;
}

}  // namespace

int character(const Partition& lambda, const Partition& mu)
{
    if (lambda.weight() != mu.weight()) throw UnequalWeight("character needs |lambda| = |mu|");
    return mn_character(lambda, mu);
}

CharacterTable character_table(int k)
{
    CharacterTable t;
    t.k = k;
    t.partitions = partitions_of(k);
    for (const auto& l : t.partitions)
        for (const auto& m : t.partitions) t.values[{l, m}] = character(l, m);
    return t;
}

Rational monomial_principal(const Partition& lambda, long n)
{
    long l = lambda.length();
    if (n < l) return Rational(0);
    Rational out(1);
    for (long i = 0; i < l; ++i) out *= n - i;
    std::map<int, int> mult;
    for (int p : lambda.parts()) ++mult[p];
    for (auto [part, m] : mult) out /= factorial(m);
    return out;
}

}  // namespace selmat
