#include "fetch.hpp"

#include <charconv>
#include <fstream>
#include <regex>
#include <sstream>
#include <system_error>

#include "httplib.h"
#include "ppc/errors.hpp"
#include "ppc/zeros.hpp"

namespace ppc::cli {

std::string canonicalize_zero_table(const std::string& body, const std::string& source,
                                    std::optional<std::size_t> limit, FetchResult* info) {
  if (body.empty()) throw ValidationError("empty response body");
  if (body.back() != '\n') throw ValidationError("response ends mid-line; download looks truncated");
  std::istringstream in(body);
  ZeroTable table;
  try {
    table = parse_zeros(in, source, limit);
  } catch (const ppc::ParseError& e) {
    throw ValidationError(e.what());
  } catch (const ppc::IntegrityError& e) {
    throw ValidationError(e.what());
  }
  if (table.empty()) throw ValidationError("no ordinates in response");
  if (limit && table.size() < *limit) {
    throw ValidationError("requested " + std::to_string(*limit) + " ordinates, response has " +
                          std::to_string(table.size()));
  }
  std::string out;
  for (const double g : table.ordinates()) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, g);
    out.append(buf, ptr);
    out += '\n';
  }
  if (info) *info = {table.size(), table.max_ordinate()};
  return out;
}

FetchResult fetch_zeros(const std::string& url, const std::filesystem::path& output,
                        std::optional<std::size_t> limit, int timeout_seconds) {
  static const std::regex pattern(R"(^(https?://[^/]+)(/.*)?$)");
  std::smatch m;
  if (!std::regex_match(url, m, pattern)) throw NetworkError("unsupported URL '" + url + "' (need http:// or https://)");
  const std::string origin = m[1];
  const std::string path = m[2].matched ? std::string(m[2]) : "/";
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (url.rfind("https://", 0) == 0) throw NetworkError("this build has no TLS support; use an http:// URL");
#endif

  httplib::Client client(origin);
  client.set_follow_location(true);
  client.set_connection_timeout(timeout_seconds);
  client.set_read_timeout(timeout_seconds);
  const auto res = client.Get(path);
  if (!res) throw NetworkError("request to " + url + " failed: " + httplib::to_string(res.error()));
  if (res->status != 200) throw NetworkError("request to " + url + " returned HTTP " + std::to_string(res->status));

  FetchResult info;
  const std::string text = canonicalize_zero_table(res->body, url, limit, &info);

  auto tmp = output;
  tmp += ".partial";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw IoError("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, output, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move download into place at " + output.string());
  }
  return info;
}

}  // namespace ppc::cli
