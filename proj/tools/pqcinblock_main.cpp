#include <cstdio>

#include "pqcbench/pqcbench.h"

int main(int argc, char** argv) {
  pqcb_cli* cli = nullptr;
  if (pqcb_cli_parse(argc, argv, &cli) != PQCB_OK) {
    std::fprintf(stderr, "%s\n\n%s", pqcb_last_error(), pqcb_cli_usage());
    return 1;
  }
  if (pqcb_cli_wants_help(cli)) {
    std::fputs(pqcb_cli_usage(), stdout);
    pqcb_cli_free(cli);
    return 0;
  }
  const int rc = pqcb_cli_run(cli);
  pqcb_cli_free(cli);
  return rc;
}
