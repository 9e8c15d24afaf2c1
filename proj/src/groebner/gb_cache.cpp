#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <shared_mutex>
#include <thread>
#include <unordered_map>

#include "tropcm/groebner.hpp"
#include "tropcm/parse.hpp"

namespace tropcm {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string file_name(const std::string& key) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx.gb", static_cast<unsigned long long>(fnv1a(key)));
  return buf;
}

}  // namespace

struct GbCache::Impl {
  mutable std::shared_mutex mutex;
  std::unordered_map<std::string, std::vector<Polynomial>> memory;
  std::string directory;
  std::atomic<std::uint64_t> hits{0};
  std::atomic<std::uint64_t> misses{0};
};

GbCache::GbCache() : impl_(std::make_unique<Impl>()) {
  if (const char* env = std::getenv("TROPCM_CACHE"); env != nullptr && *env != '\0') {
    impl_->directory = env;
  }
}

GbCache::~GbCache() = default;

GbCache& GbCache::instance() {
  static GbCache cache;
  return cache;
}

std::optional<std::vector<Polynomial>> GbCache::lookup(const std::string& key, const RingPtr& ring) {
  std::string dir;
  {
    std::shared_lock lock(impl_->mutex);
    auto it = impl_->memory.find(key);
    if (it != impl_->memory.end()) {
      ++impl_->hits;
      return it->second;
    }
    dir = impl_->directory;
  }
  if (!dir.empty()) {
    std::ifstream in(std::filesystem::path(dir) / file_name(key));
    std::string stored_key;
    if (in && std::getline(in, stored_key) && stored_key == key) {
      std::vector<Polynomial> basis;
      std::string line;
      bool ok = true;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
          basis.push_back(parse_polynomial(line, ring));
        } catch (const std::exception&) {
          ok = false;
          break;
        }
      }
      if (ok) {
        std::unique_lock lock(impl_->mutex);
        impl_->memory.emplace(key, basis);
        ++impl_->hits;
        return basis;
      }
    }
  }
  ++impl_->misses;
  return std::nullopt;
}

void GbCache::store(const std::string& key, const std::vector<Polynomial>& basis) {
  std::string dir;
  {
    std::unique_lock lock(impl_->mutex);
    impl_->memory.emplace(key, basis);
    dir = impl_->directory;
  }
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  const auto target = std::filesystem::path(dir) / file_name(key);
  auto tmp = target;
  tmp += ".tmp" + std::to_string(fnv1a(key + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()))));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << key << '\n';
    for (const auto& p : basis) out << p.to_string() << '\n';
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

void GbCache::set_directory(std::string dir) {
  std::unique_lock lock(impl_->mutex);
  impl_->directory = std::move(dir);
}

std::string GbCache::directory() const {
  std::shared_lock lock(impl_->mutex);
  return impl_->directory;
}

void GbCache::clear_memory() {
  std::unique_lock lock(impl_->mutex);
  impl_->memory.clear();
}

std::uint64_t GbCache::hits() const { return impl_->hits; }
std::uint64_t GbCache::misses() const { return impl_->misses; }

}  // namespace tropcm
