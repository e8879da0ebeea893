#include "steenrod/transition.hpp"

#include <array>
#include <cstdlib>
#include <fstream>
#include <future>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "steenrod/milnor.hpp"

namespace steenrod {

namespace {

std::size_t packed_index(std::size_t n, std::size_t i, std::size_t j)
{
    // rows 0..i-1 hold n, n-1, ..., n-i+1 entries
    return i * n - i * (i - 1) / 2 + (j - i);
}

void put_u32(std::ostream& out, std::uint32_t v)
{
    const std::array<char, 4> b{static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF),
                                static_cast<char>((v >> 16) & 0xFF), static_cast<char>((v >> 24) & 0xFF)};
    out.write(b.data(), 4);
}

std::uint32_t get_u32(std::istream& in)
{
    std::array<unsigned char, 4> b{};
    if (!in.read(reinterpret_cast<char*>(b.data()), 4))
        throw std::runtime_error("transition matrix file truncated");
    return std::uint32_t{b[0]} | (std::uint32_t{b[1]} << 8) | (std::uint32_t{b[2]} << 16) | (std::uint32_t{b[3]} << 24);
}

constexpr std::array<char, 4> kMagic{'S', 'T', 'M', 'X'};
constexpr std::uint32_t kVersion = 1;

}  // namespace

TransitionMatrix::TransitionMatrix(Prime p, Entry reduced_degree, std::vector<Coeff> packed_upper)
    : p_(p), r_(reduced_degree), words_(enumerate_gamma_r(p, reduced_degree)), upper_(std::move(packed_upper))
{
    const std::size_t n = words_.size();
    if (upper_.size() != n * (n + 1) / 2)
        throw std::invalid_argument("packed matrix has wrong size for its degree");
}

Coeff TransitionMatrix::at(std::size_t i, std::size_t j) const
{
    return j < i ? 0 : upper_[packed_index(dim(), i, j)];
}

DenseFpMatrix dense_transition_matrix(Prime p, Entry r)
{
    const auto words = enumerate_gamma_r(p, r);
    std::unordered_map<ExponentSeq, std::size_t, ExponentSeqHash> column;
    for (std::size_t j = 0; j < words.size(); ++j)
        column.emplace(gamma(words[j], p), j);

    DenseFpMatrix m{words.size(), std::vector<Coeff>(words.size() * words.size(), 0)};
    for (std::size_t i = 0; i < words.size(); ++i) {
        const MilnorElement row = admissible_to_milnor(GammaSeq(words[i], p));
        for (const auto& [mono, c] : row.terms()) {
            auto it = column.find(mono);
            if (it == column.end())
                throw std::logic_error("Milnor monomial " + mono.str() + " outside the degree basis");
            m.entries[i * m.dim + it->second] = c;
        }
    }
    return m;
}

bool is_upper_unitriangular(const DenseFpMatrix& m, Prime p)
{
    for (std::size_t i = 0; i < m.dim; ++i) {
        const Coeff d = m(i, i);
        if (d != 1 && d != p - 1)
            return false;
        for (std::size_t j = 0; j < i; ++j)
            if (m(i, j) != 0)
                return false;
    }
    return true;
}

TransitionMatrix build_transition_matrix(Prime p, Entry r)
{
    const DenseFpMatrix m = dense_transition_matrix(p, r);
    if (!is_upper_unitriangular(m, p))
        throw std::logic_error("transition matrix in reduced degree " + std::to_string(r) + " is not unitriangular");
    std::vector<Coeff> packed;
    packed.reserve(m.dim * (m.dim + 1) / 2);
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = i; j < m.dim; ++j)
            packed.push_back(m(i, j));
    return TransitionMatrix(p, r, std::move(packed));
}

void write_transition_matrix(std::ostream& out, const TransitionMatrix& m)
{
    out.write(kMagic.data(), kMagic.size());
    put_u32(out, kVersion);
    put_u32(out, m.prime());
    put_u32(out, static_cast<std::uint32_t>(m.degree()));
    put_u32(out, static_cast<std::uint32_t>(m.dim()));
    for (Coeff c : m.packed())
        put_u32(out, c);
}

TransitionMatrix read_transition_matrix(std::istream& in)
{
    std::array<char, 4> magic{};
    if (!in.read(magic.data(), 4) || magic != kMagic)
        throw std::runtime_error("not a transition matrix file");
    if (get_u32(in) != kVersion)
        throw std::runtime_error("unsupported transition matrix version");
    const std::uint32_t p_raw = get_u32(in);
    if (!is_prime(p_raw))
        throw std::runtime_error("transition matrix header has a non-prime");
    const Prime p(p_raw);
    const std::uint32_t degree = get_u32(in);
    if (degree % (2 * (p - 1)) != 0)
        throw std::runtime_error("transition matrix degree not a multiple of 2(p-1)");
    const std::uint32_t n = get_u32(in);
    std::vector<Coeff> packed(std::size_t{n} * (n + 1) / 2);
    for (auto& c : packed) {
        c = get_u32(in);
        if (c >= p)
            throw std::runtime_error("transition matrix entry out of range");
    }
    TransitionMatrix m(p, degree / (2 * (p - 1)), std::move(packed));
    if (m.dim() != n)
        throw std::runtime_error("transition matrix dimension disagrees with its degree");
    for (std::size_t i = 0; i < n; ++i)
        if (m.at(i, i) != 1 && m.at(i, i) != p - 1)
            throw std::runtime_error("transition matrix diagonal is not +-1");
    return m;
}

struct TransitionCache::Impl
{
    mutable std::mutex mutex;
    std::map<std::pair<std::uint32_t, Entry>, std::shared_future<std::shared_ptr<const TransitionMatrix>>> memo;
    std::filesystem::path dir;
    std::size_t computed = 0;

    std::shared_ptr<const TransitionMatrix> load_or_build(Prime p, Entry r, const std::filesystem::path& d)
    {
        if (!d.empty()) {
            std::ifstream in(d / file_name(p, r), std::ios::binary);
            if (in) {
                try {
                    auto m = std::make_shared<const TransitionMatrix>(read_transition_matrix(in));
                    if (m->prime() == p && m->reduced_degree() == r)
                        return m;
                } catch (const std::runtime_error&) {
                    // fall through and rebuild
                }
            }
        }
        auto m = std::make_shared<const TransitionMatrix>(build_transition_matrix(p, r));
        {
            std::lock_guard lock(mutex);
            ++computed;
        }
        if (!d.empty()) {
            std::error_code ec;
            std::filesystem::create_directories(d, ec);
            const auto tmp = d / (file_name(p, r).string() + ".tmp");
            std::ofstream out(tmp, std::ios::binary);
            if (out) {
                write_transition_matrix(out, *m);
                out.close();
                std::filesystem::rename(tmp, d / file_name(p, r), ec);
            }
        }
        return m;
    }
};

TransitionCache::TransitionCache() : impl_(std::make_unique<Impl>())
{
    if (const char* env = std::getenv(kCacheDirEnv); env && *env)
        impl_->dir = env;
}

TransitionCache::~TransitionCache() = default;

TransitionCache& TransitionCache::instance()
{
    static TransitionCache cache;
    return cache;
}

std::filesystem::path TransitionCache::file_name(Prime p, Entry r)
{
    return "transition_p" + std::to_string(p.value()) + "_d" + std::to_string(2 * (p - 1) * r) + ".bin";
}

std::shared_ptr<const TransitionMatrix> TransitionCache::get(Prime p, Entry r)
{
    const auto key = std::make_pair(p.value(), r);
    std::promise<std::shared_ptr<const TransitionMatrix>> promise;
    std::shared_future<std::shared_ptr<const TransitionMatrix>> future;
    std::filesystem::path dir;
    bool owner = false;
    {
        std::lock_guard lock(impl_->mutex);
        if (auto it = impl_->memo.find(key); it != impl_->memo.end()) {
            future = it->second;
        } else {
            future = promise.get_future().share();
            impl_->memo.emplace(key, future);
            dir = impl_->dir;
            owner = true;
        }
    }
    if (owner) {
        try {
            promise.set_value(impl_->load_or_build(p, r, dir));
        } catch (...) {
            promise.set_exception(std::current_exception());
            std::lock_guard lock(impl_->mutex);
            impl_->memo.erase(key);
            throw;
        }
    }
    return future.get();
}

void TransitionCache::set_directory(std::filesystem::path dir)
{
    std::lock_guard lock(impl_->mutex);
    impl_->dir = std::move(dir);
}

std::filesystem::path TransitionCache::directory() const
{
    std::lock_guard lock(impl_->mutex);
    return impl_->dir;
}

std::size_t TransitionCache::computed_count() const
{
    std::lock_guard lock(impl_->mutex);
    return impl_->computed;
}

void TransitionCache::clear()
{
    std::lock_guard lock(impl_->mutex);
    impl_->memo.clear();
    impl_->computed = 0;
}

}  // namespace steenrod
