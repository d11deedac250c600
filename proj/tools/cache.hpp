#pragma once

// Append-only JSON-lines result cache shared by concurrent CLI processes.

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

namespace magiclab::cli {

inline constexpr const char * tool_version = "0.1.0";

/// flock-based guard on an open descriptor.
class FileLock {
public:
    FileLock(const std::filesystem::path & path, int operation)
    {
        fd_ = ::open(path.c_str(), O_RDWR | O_CREAT, 0644);
        if (fd_ >= 0 && ::flock(fd_, operation) != 0) {
            ::close(fd_);
            fd_ = -1;
        }
    }
    FileLock(const FileLock &) = delete;
    FileLock & operator=(const FileLock &) = delete;
    ~FileLock()
    {
        if (fd_ >= 0) {
            ::flock(fd_, LOCK_UN);
            ::close(fd_);
        }
    }
    bool held() const noexcept { return fd_ >= 0; }

private:
    int fd_ = -1;
};

/// Entries are {"key","value","tool_version"} lines. Only exact answers are stored, so
/// search limits and worker counts are not part of the key: an exact answer does not
/// depend on them.
class Cache {
public:
    explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    /// MAGICLAB_CACHE, else $XDG_CACHE_HOME/magiclab, else $HOME/.cache/magiclab.
    static std::optional<Cache> from_environment()
    {
        if (const char * dir = std::getenv("MAGICLAB_CACHE"); dir && *dir)
            return Cache(dir);
        if (const char * xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
            return Cache(std::filesystem::path(xdg) / "magiclab");
        if (const char * home = std::getenv("HOME"); home && *home)
            return Cache(std::filesystem::path(home) / ".cache" / "magiclab");
        return std::nullopt;
    }

    std::filesystem::path file() const { return dir_ / "cache.jsonl"; }

    std::optional<nlohmann::json> lookup(const std::string & key) const
    {
        std::error_code ec;
        if (! std::filesystem::exists(file(), ec))
            return std::nullopt;
        FileLock lock(lock_file(), LOCK_SH);
        std::ifstream in(file());
        std::optional<nlohmann::json> found;
        std::string line;
        while (std::getline(in, line)) {
            auto entry = nlohmann::json::parse(line, nullptr, false);
            if (entry.is_discarded() || ! entry.is_object())
                continue;
            if (entry.value("tool_version", "") == tool_version && entry.value("key", "") == key
                && entry.contains("value"))
                found = entry["value"];
        }
        return found;
    }

    /// Best effort: an unwritable cache directory is not an error.
    void store(const std::string & key, const nlohmann::json & value) const
    {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        FileLock lock(lock_file(), LOCK_EX);
        if (! lock.held())
            return;
        std::ofstream out(file(), std::ios::app);
        nlohmann::json entry{{"key", key}, {"value", value}, {"tool_version", tool_version}};
        out << entry.dump() << '\n';
    }

private:
    std::filesystem::path lock_file() const { return dir_ / "cache.lock"; }

    std::filesystem::path dir_;
};

} // namespace magiclab::cli
