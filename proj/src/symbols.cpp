#include "dfsub/symbols.hpp"

#include <array>
#include <atomic>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace dfsub {

namespace {

constexpr std::size_t kChunkBits = 10;
constexpr std::size_t kChunkSize = std::size_t{1} << kChunkBits;
constexpr std::size_t kMaxChunks = 4096;

using Chunk = std::array<std::atomic<const SymbolInfo*>, kChunkSize>;

std::string intern_key(const SymbolInfo& s) {
    std::string key = std::to_string(static_cast<int>(s.kind)) + "|";
    for (const auto& c : s.vec) key += c.to_string() + ";";
    key += "|" + s.name;
    return key;
}

std::string shift_text(const Const& c) {
    if (c.is_zero()) return "";
    std::string t = c.to_string();
    if (!t.empty() && t[0] == '-') return t;
    return "+" + t;
}

}  // namespace

struct SymbolTable::Impl {
    std::mutex mu;
    std::unordered_map<std::string, SymId> ids;
    std::vector<std::unique_ptr<SymbolInfo>> owned;
    std::array<std::atomic<Chunk*>, kMaxChunks> chunks{};
    std::atomic<std::size_t> count{0};
};

SymbolTable& SymbolTable::instance() {
    static SymbolTable table;
    return table;
}

SymbolTable::SymbolTable() : impl_(new Impl) {}

SymId SymbolTable::intern(SymbolInfo info) {
    std::string key = intern_key(info);
    std::lock_guard<std::mutex> lock(impl_->mu);
    if (auto it = impl_->ids.find(key); it != impl_->ids.end()) return it->second;
    std::size_t id = impl_->count.load(std::memory_order_relaxed);
    std::size_t c = id >> kChunkBits;
    if (c >= kMaxChunks) throw Error(ErrorKind::Unsupported, "symbol table full");
    if (impl_->chunks[c].load(std::memory_order_acquire) == nullptr) {
        impl_->chunks[c].store(new Chunk{}, std::memory_order_release);
    }
    impl_->owned.push_back(std::make_unique<SymbolInfo>(std::move(info)));
    (*impl_->chunks[c].load(std::memory_order_acquire))[id & (kChunkSize - 1)].store(impl_->owned.back().get(),
                                                                                       std::memory_order_release);
    impl_->ids.emplace(std::move(key), static_cast<SymId>(id));
    impl_->count.store(id + 1, std::memory_order_release);
    return static_cast<SymId>(id);
}

const SymbolInfo& SymbolTable::info(SymId id) const {
    if (id >= impl_->count.load(std::memory_order_acquire)) {
        throw Error(ErrorKind::UnknownSymbol, "unknown symbol id " + std::to_string(id));
    }
    Chunk* chunk = impl_->chunks[id >> kChunkBits].load(std::memory_order_acquire);
    return *(*chunk)[id & (kChunkSize - 1)].load(std::memory_order_acquire);
}

std::size_t SymbolTable::size() const { return impl_->count.load(std::memory_order_acquire); }

SymId SymbolTable::x() { return intern(SymbolInfo{SymKind::BaseX, {}, "", "x"}); }

SymId SymbolTable::iterlog(const ConstVec& vec) {
    if (vec.empty()) return x();
    SymId inner = iterlog(vec_project(vec, 1));
    std::string text = "ln(" + info(inner).text + shift_text(vec.back()) + ")";
    return intern(SymbolInfo{SymKind::IterLog, vec, "", std::move(text)});
}

SymId SymbolTable::antiderivative(std::string_view name) {
    if (find_generic(name) && info(*find_generic(name)).kind != SymKind::Antiderivative) {
        throw Error(ErrorKind::InvalidTower, "symbol '" + std::string(name) + "' declared twice with different kinds");
    }
    return intern(SymbolInfo{SymKind::Antiderivative, {}, std::string(name), std::string(name)});
}

SymId SymbolTable::exponential(std::string_view name) {
    if (find_generic(name) && info(*find_generic(name)).kind != SymKind::Exponential) {
        throw Error(ErrorKind::InvalidTower, "symbol '" + std::string(name) + "' declared twice with different kinds");
    }
    return intern(SymbolInfo{SymKind::Exponential, {}, std::string(name), std::string(name)});
}

SymId SymbolTable::coordinate(std::string_view name) {
    return intern(SymbolInfo{SymKind::Coordinate, {}, std::string(name), std::string(name)});
}

std::optional<SymId> SymbolTable::find_generic(std::string_view name) const {
    std::lock_guard<std::mutex> lock(impl_->mu);
    for (SymKind k : {SymKind::Antiderivative, SymKind::Exponential}) {
        SymbolInfo probe{k, {}, std::string(name), ""};
        if (auto it = impl_->ids.find(intern_key(probe)); it != impl_->ids.end()) return it->second;
    }
    return std::nullopt;
}

SymId project(SymId id, std::size_t k) {
    const SymbolInfo& s = sym_info(id);
    if (s.kind != SymKind::IterLog || k == 0) return id;
    return SymbolTable::instance().iterlog(vec_project(s.vec, k));
}

namespace {

int kind_group(SymKind k) {
    switch (k) {
        case SymKind::BaseX:
        case SymKind::IterLog:
            return 0;
        case SymKind::Antiderivative:
            return 1;
        case SymKind::Exponential:
            return 2;
        case SymKind::Coordinate:
            return 3;
    }
    return 4;
}

}  // namespace

int symbol_cmp(SymId a, SymId b) {
    if (a == b) return 0;
    const SymbolInfo& sa = sym_info(a);
    const SymbolInfo& sb = sym_info(b);
    int ga = kind_group(sa.kind), gb = kind_group(sb.kind);
    if (ga != gb) return ga < gb ? -1 : 1;
    if (sa.level() != sb.level()) return sa.level() < sb.level() ? -1 : 1;
    if (int c = compare_vec(sa.vec, sb.vec); c != 0) return c;
    // Coordinates w1, w2, ... sort numerically.
    if (sa.name.size() != sb.name.size() && sa.kind == SymKind::Coordinate) return sa.name.size() < sb.name.size() ? -1 : 1;
    if (int c = sa.name.compare(sb.name); c != 0) return c < 0 ? -1 : 1;
    return 0;
}

void sort_symbols(std::vector<SymId>& ids) { std::sort(ids.begin(), ids.end(), SymLess{}); }

std::string symbol_text(SymId id) { return sym_info(id).text; }

}  // namespace dfsub
