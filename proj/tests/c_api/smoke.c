#include <stdio.h>
#include <string.h>

#include "pqcbench/pqcbench.h"

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s failed\n", __FILE__, __LINE__, #cond); \
      return 1;                                                   \
    }                                                             \
  } while (0)

int main(void) {
  pqcb_scheme* s = NULL;
  pqcb_buffer pk = {0}, sk = {0}, sig = {0};
  const uint8_t msg[] = "tx";
  int valid = 0;
  pqcb_variant_info info;
  pqcb_stat st;
  const double xs[] = {2.0, 4.0};

  EXPECT(pqcb_catalog_size() == 46);
  EXPECT(pqcb_catalog_find("MAYO-2", &info) == PQCB_OK);
  EXPECT(strcmp(info.family, "Mayo") == 0);
  EXPECT(pqcb_scheme_open("MAYO-2", &s) == PQCB_OK);
  EXPECT(pqcb_scheme_keypair(s, &pk, &sk) == PQCB_OK);
  EXPECT(pqcb_scheme_sign(s, sk.data, sk.size, msg, sizeof msg, &sig) == PQCB_OK);
  EXPECT(pqcb_scheme_verify(s, pk.data, pk.size, msg, sizeof msg, sig.data, sig.size, &valid) == PQCB_OK);
  EXPECT(valid == 1);
  pqcb_buffer_free(&pk);
  pqcb_buffer_free(&sk);
  pqcb_buffer_free(&sig);
  pqcb_scheme_close(s);

  EXPECT(pqcb_summarize(xs, 2, &st) == PQCB_OK);
  EXPECT(st.mean_ms == 3.0);
  EXPECT(pqcb_summarize(NULL, 0, &st) == PQCB_ERR_EMPTY_SAMPLES);
  puts("c api smoke ok");
  return 0;
}
