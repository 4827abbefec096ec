#pragma once

#include <fcntl.h>
#include <sys/file.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "io.hpp"
#include "version.hpp"

namespace symfund::cache {

using json = nlohmann::json;

inline constexpr int schema_version = 1;

enum class Kind { plethysm, product };

inline const char* kind_name(Kind k) { return k == Kind::plethysm ? "plethysm" : "product"; }

inline Kind parse_kind(const std::string& s)
{
    if (s == "plethysm")
        return Kind::plethysm;
    if (s == "product")
        return Kind::product;
    throw std::invalid_argument("unknown record kind '" + s + "'");
}

struct CacheRecord {
    Kind kind = Kind::plethysm;
    Partition alpha;
    Partition beta;
    SchurVector expansion;
    std::string tool_version = version;
};

inline json header_json() { return json{{"format", "symfund-cache"}, {"schema", schema_version}}; }

inline json to_json(const CacheRecord& r)
{
    return json{{"kind", kind_name(r.kind)},
                {"alpha", r.alpha.vector()},
                {"beta", r.beta.vector()},
                {"expansion", io::to_json(r.expansion)},
                {"tool_version", r.tool_version}};
}

inline CacheRecord record_from_json(const json& j)
{
    if (!j.is_object())
        throw std::invalid_argument("record is not an object");
    CacheRecord r;
    r.kind = parse_kind(j.at("kind").get<std::string>());
    r.alpha = Partition(j.at("alpha").get<std::vector<int>>());
    r.beta = Partition(j.at("beta").get<std::vector<int>>());
    r.expansion = io::schur_from_json(j.at("expansion"));
    r.tool_version = j.at("tool_version").get<std::string>();
    return r;
}

/// $SYMFUND_CACHE, else $XDG_CACHE_HOME/symfund/cache.ndjson, else
/// ~/.cache/symfund/cache.ndjson. Empty if none of these is set.
inline std::filesystem::path default_path()
{
    if (const char* p = std::getenv("SYMFUND_CACHE"); p && *p)
        return p;
    if (const char* p = std::getenv("XDG_CACHE_HOME"); p && *p)
        return std::filesystem::path(p) / "symfund" / "cache.ndjson";
    if (const char* p = std::getenv("HOME"); p && *p)
        return std::filesystem::path(p) / ".cache" / "symfund" / "cache.ndjson";
    return {};
}

namespace detail {

class LockedFile {
public:
    LockedFile(const std::filesystem::path& path, int flags, int op)
    {
        fd_ = ::open(path.c_str(), flags | O_CLOEXEC, 0644);
        if (fd_ < 0)
            return;
        if (::flock(fd_, op) != 0) {
            ::close(fd_);
            fd_ = -1;
        }
    }
    ~LockedFile()
    {
        if (fd_ >= 0) {
            ::flock(fd_, LOCK_UN);
            ::close(fd_);
        }
    }
    LockedFile(const LockedFile&) = delete;
    LockedFile& operator=(const LockedFile&) = delete;

    bool ok() const noexcept { return fd_ >= 0; }
    int fd() const noexcept { return fd_; }

    std::string read_all() const
    {
        std::string out;
        char buf[1 << 16];
        ::lseek(fd_, 0, SEEK_SET);
        for (ssize_t n; (n = ::read(fd_, buf, sizeof buf)) > 0;)
            out.append(buf, static_cast<std::size_t>(n));
        return out;
    }

    bool write_all(const std::string& s) const
    {
        std::size_t done = 0;
        while (done < s.size()) {
            ssize_t n = ::write(fd_, s.data() + done, s.size() - done);
            if (n <= 0)
                return false;
            done += static_cast<std::size_t>(n);
        }
        return true;
    }

private:
    int fd_ = -1;
};

inline bool valid_header(const std::string& line)
{
    try {
        json h = json::parse(line);
        return h.is_object() && h.value("format", "") == "symfund-cache" && h.value("schema", -1) == schema_version;
    } catch (const json::exception&) {
        return false;
    }
}

}  // namespace detail

/// Append-only NDJSON store of plethysm and product expansions.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path path, std::string tool_version = version)
        : path_(std::move(path)), tool_version_(std::move(tool_version))
    {
        load();
    }

    const std::filesystem::path& path() const noexcept { return path_; }
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }
    std::size_t size() const noexcept { return entries_.size(); }

    std::optional<SchurVector> lookup(Kind kind, const Partition& a, const Partition& b) const
    {
        auto it = entries_.find(Key{kind, a, b});
        if (it == entries_.end())
            return std::nullopt;
        return it->second;
    }

    /// Appends a record under an exclusive lock. Returns false if the file
    /// could not be written.
    bool store(Kind kind, const Partition& a, const Partition& b, const SchurVector& expansion)
    {
        entries_[Key{kind, a, b}] = expansion;
        std::error_code ec;
        if (path_.has_parent_path())
            std::filesystem::create_directories(path_.parent_path(), ec);
        detail::LockedFile file(path_, O_RDWR | O_CREAT, LOCK_EX);
        if (!file.ok()) {
            warnings_.push_back("cache: cannot open " + path_.string() + " for writing");
            return false;
        }
        const std::string existing = file.read_all();
        std::string out;
        const auto first_newline = existing.find('\n');
        if (existing.empty() || !detail::valid_header(existing.substr(0, first_newline))) {
            if (::ftruncate(file.fd(), 0) != 0)
                return false;
            out = header_json().dump() + "\n";
        } else if (existing.back() != '\n') {
            out = "\n";
        }
        CacheRecord record{kind, a, b, expansion, tool_version_};
        out += to_json(record).dump() + "\n";
        ::lseek(file.fd(), 0, SEEK_END);
        return file.write_all(out);
    }

private:
    struct Key {
        Kind kind;
        Partition alpha;
        Partition beta;
        friend auto operator<=>(const Key&, const Key&) = default;
    };

    void load()
    {
        if (path_.empty() || !std::filesystem::exists(path_))
            return;
        detail::LockedFile file(path_, O_RDONLY, LOCK_SH);
        if (!file.ok()) {
            warnings_.push_back("cache: cannot read " + path_.string());
            return;
        }
        const std::string text = file.read_all();
        std::size_t pos = 0;
        int line_no = 0;
        while (pos < text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string::npos)
                end = text.size();
            const std::string line = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_no;
            if (line_no == 1) {
                if (!detail::valid_header(line)) {
                    warnings_.push_back("cache: " + path_.string() + " has an unknown header; ignoring its contents");
                    return;
                }
                continue;
            }
            if (line.empty())
                continue;
            try {
                CacheRecord r = record_from_json(json::parse(line));
                if (r.tool_version != tool_version_)
                    continue;
                entries_[Key{r.kind, r.alpha, r.beta}] = std::move(r.expansion);
            } catch (const std::exception&) {
                warnings_.push_back("cache: skipping corrupt line " + std::to_string(line_no) + " of "
                                    + path_.string());
            }
        }
    }

    std::filesystem::path path_;
    std::string tool_version_;
    std::map<Key, SchurVector> entries_;
    std::vector<std::string> warnings_;
};

}  // namespace symfund::cache
