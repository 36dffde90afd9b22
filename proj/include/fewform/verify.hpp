#pragma once

#include <string>
#include <vector>

namespace fewform {

struct VerifyItem {
    std::string name;
    bool pass = false;
    std::string detail;  // first divergent value on failure
};

// Replays the printed identities of the source text against this
// implementation; every item must pass on a correct build.
std::vector<VerifyItem> verify_paper();

}  // namespace fewform
