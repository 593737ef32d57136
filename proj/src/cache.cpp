// SPDX-License-Identifier: Apache-2.0

#include "certmass/cache.hpp"

#include "certmass/integrals.hpp"
#include "certmass/mass.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>
#include <vector>

namespace certmass {

using nlohmann::json;

namespace {

constexpr const char* kFormatTag = "certmass-coefficient-cache";

std::string fnv1a64(const std::string& data)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

json entry_json(const char* first, const char* second, unsigned i, unsigned j, const ExactValue& v)
{
    return {{first, i},
            {second, j},
            {"a_num", v.a.get_num().get_str(10)},
            {"a_den", v.a.get_den().get_str(10)},
            {"b_num", v.b.get_num().get_str(10)},
            {"b_den", v.b.get_den().get_str(10)}};
}

struct Entry {
    unsigned i = 0;
    unsigned j = 0;
    ExactValue value;
};

Entry parse_entry(const json& e, const char* first, const char* second)
{
    Entry out;
    out.i = e.at(first).get<unsigned>();
    out.j = e.at(second).get<unsigned>();
    out.value.a = make_rational(BigInt(e.at("a_num").get<std::string>(), 10),
                                BigInt(e.at("a_den").get<std::string>(), 10));
    out.value.b = make_rational(BigInt(e.at("b_num").get<std::string>(), 10),
                                BigInt(e.at("b_den").get<std::string>(), 10));
    return out;
}

json payload_json()
{
    json moments = json::array();
    for (const auto& [key, v] : f_tilde_entries())
        moments.push_back(entry_json("p", "q", key.first, key.second, v));
    json inner = json::array();
    for (const auto& [key, v] : inner_sum_entries())
        inner.push_back(entry_json("j", "k", key.first, key.second, v));
    return {{"f_tilde", std::move(moments)}, {"inner_sum", std::move(inner)}};
}

ExactValue moment_closed_form(unsigned p, unsigned q)
{
    ExactValue v = half_moment_numerator(p) + half_moment_numerator(q);
    v *= make_rational(1, p + q + 3);
    return v;
}

}  // namespace

std::filesystem::path cache_file(const std::filesystem::path& dir)
{
    return dir / ("coefficients-v" + std::to_string(kCacheFormatVersion) + ".json");
}

CacheLoadResult load_cache(const std::filesystem::path& dir)
{
    CacheLoadResult result;
    const auto path = cache_file(dir);
    std::error_code ec;
    if (dir.empty() || !std::filesystem::exists(path, ec))
        return result;

    std::vector<Entry> moments;
    std::vector<Entry> inner;
    try {
        std::ifstream in(path);
        const json doc = json::parse(in);
        if (doc.at("format").get<std::string>() != kFormatTag)
            throw std::runtime_error("unknown format tag");
        if (doc.at("version").get<int>() != kCacheFormatVersion)
            throw std::runtime_error("format version " + std::to_string(doc.at("version").get<int>()) +
                                     " != " + std::to_string(kCacheFormatVersion));
        const json& payload = doc.at("payload");
        if (doc.at("checksum").get<std::string>() != fnv1a64(payload.dump()))
            throw std::runtime_error("checksum mismatch");
        for (const auto& e : payload.at("f_tilde"))
            moments.push_back(parse_entry(e, "p", "q"));
        for (const auto& e : payload.at("inner_sum"))
            inner.push_back(parse_entry(e, "j", "k"));

        for (const auto& m : moments)
            if (!(m.value == moment_closed_form(m.i, m.j)))
                throw std::runtime_error("moment entry failed verification");
        // Spot-check first, middle and last inner sum against the direct double sum.
        if (!inner.empty()) {
            for (std::size_t idx : {std::size_t{0}, inner.size() / 2, inner.size() - 1}) {
                const Entry& e = inner[idx];
                if (!(e.value == inner_sum_reference(e.i, e.j)))
                    throw std::runtime_error("inner sum entry failed verification");
            }
        }
    } catch (const std::exception& ex) {
        result.warning = "ignoring cache " + path.string() + ": " + ex.what();
        return result;
    }

    for (const auto& m : moments)
        seed_f_tilde(m.i, m.j, m.value);
    for (const auto& e : inner)
        seed_inner_sum(e.i, e.j, e.value);
    result.loaded = true;
    result.moments = moments.size();
    result.inner_sums = inner.size();
    return result;
}

bool store_cache(const std::filesystem::path& dir, std::string* warning)
{
    const auto fail = [warning](const std::string& msg) {
        if (warning)
            *warning = msg;
        return false;
    };
    if (dir.empty())
        return fail("no cache directory");

    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        return fail("cannot create " + dir.string() + ": " + ec.message());

    json payload = payload_json();
    json doc = {{"format", kFormatTag},
                {"version", kCacheFormatVersion},
                {"checksum", fnv1a64(payload.dump())},
                {"payload", std::move(payload)}};

    const auto target = cache_file(dir);
    auto temp = target;
    temp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(temp, std::ios::trunc);
        if (!out)
            return fail("cannot write " + temp.string());
        out << doc.dump() << '\n';
        if (!out)
            return fail("write failed for " + temp.string());
    }
    std::filesystem::rename(temp, target, ec);
    if (ec)
        return fail("cannot rename " + temp.string() + ": " + ec.message());
    return true;
}

std::filesystem::path resolve_cache_dir(const std::string& explicit_dir)
{
    if (!explicit_dir.empty())
        return explicit_dir;
    if (const char* env = std::getenv(kCacheDirEnv); env && *env)
        return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "certmass";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "certmass";
    return {};
}

}  // namespace certmass
