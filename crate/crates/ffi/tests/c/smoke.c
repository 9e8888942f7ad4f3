#include <stdio.h>
#include <string.h>
#include "nestlat.h"

static int check(int cond, const char *what) {
  if (!cond) {
    fprintf(stderr, "failed: %s\n", what);
  }
  return cond ? 0 : 1;
}

int main(void) {
  int failures = 0;
  NlMatrix *m = NULL;
  char *out = NULL;
  size_t count = 0;

  failures += check(nl_matrix_from_json("{\"ring\":\"Q\",\"rows\":2,\"cols\":2,\"entries\":[[0,2],[1,1]]}", &m) == NL_STATUS_OK, "parse");
  failures += check(nl_echelon(m, NL_SIDE_LEFT, &out) == NL_STATUS_OK, "echelon");
  failures += check(out != NULL && strstr(out, "\"rank\":2") != NULL, "rank 2");
  nl_string_free(out);
  nl_matrix_free(m);

  failures += check(nl_matrix_from_json("{oops", &m) == NL_STATUS_USAGE_ERROR, "usage error");
  failures += check(nl_last_error_message() != NULL, "error message");

  failures += check(nl_enumerate_count("GF(2)", "M=(1,1);N=(1,1)", "left", &count) == NL_STATUS_OK, "enumerate");
  failures += check(count == 7, "count 7");

  printf("%d failures\n", failures);
  return failures;
}
