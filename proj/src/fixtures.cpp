#include "citenet/fixtures.hpp"

#include <string>

namespace citenet::fixtures {

CitationMatrix price_biochemistry() {
  JournalSet journals({
      "J. Biol. Chem.",
      "Biochim. Biophys. Acta",
      "Proc. Natl. Acad. Sci. USA",
      "Biochemistry",
      "Nature",
      "Biochem. J.",
      "J. Mol. Biol.",
      "Biochem. Biophys. Res. Commun.",
  });
  Eigen::MatrixXd z(8, 8);
  // clang-format off
  z << 9384, 6181, 2107, 3750,  609, 2335,  719, 2511,
       2406, 7550,  865, 1757,  365, 1478,  408, 1120,
       2770, 2184, 3995, 1946, 1470,  488, 1239, 1329,
       2553, 2591, 1057, 3827,  299,  653,  601,  887,
       1007, 1230, 1407,  837, 2963,  379,  603,  630,
       1183, 1812,  326,  632,  201, 2464,  150,  528,
       1109, 1136, 1251, 1347,  504,  216, 2545,  367,
       1624, 1719,  695, 1040,  263,  564,  241, 1313;
  // clang-format on
  return CitationMatrix(std::move(journals), std::move(z));
}

std::vector<std::string_view> names() { return {"price"}; }

CitationMatrix by_name(std::string_view name) {
  if (name == "price") return price_biochemistry();
  throw UsageError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace citenet::fixtures
