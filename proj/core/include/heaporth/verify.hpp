#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace heaporth {

struct VerifyReport {
  std::string id;
  bool ok = true;
  // One "ok ..." or "FAIL ..." line per checked instance.
  std::vector<std::string> lines;
  std::string first_failure;
};

struct Verifier {
  std::string id;
  std::string summary;
  unsigned default_nmax;
  std::function<VerifyReport(unsigned nmax)> run;
};

// Every named identity the CLI can certify, in a fixed order.
const std::vector<Verifier>& verifiers();

// Throws kParse for an unknown id.
const Verifier& find_verifier(const std::string& id);

VerifyReport run_verifier(const std::string& id, std::optional<unsigned> nmax = std::nullopt);

}  // namespace heaporth
