#ifndef NOETHER_SESSION_HPP
#define NOETHER_SESSION_HPP

#include <map>
#include <string>

#include "certify.hpp"

namespace noether {

// A session file declares one variable context, named ideals, and named
// problem instances. All expressions are parsed at load time.
struct Session {
  ContextPtr ctx;
  std::map<std::string, IdealPresentation> ideals;
  std::map<std::string, ProblemInstance> instances;
  std::string source_text;  // raw file bytes, hashed into report digests
};

Session load_session_json(const std::string& json_text);
Session load_session_file(const std::string& path);

inline constexpr int kSessionSchemaVersion = 1;

}  // namespace noether

#endif
