/* Compiles maniplex.h as C and makes a round trip through the library. */
#include <stdio.h>
#include <string.h>

#include "maniplex.h"

int main(void) {
  mpx_graph* g = NULL;
  mpx_report* r = NULL;
  char* text = NULL;
  int ok;
  if (mpx_gen_hypercube(3, &g) != MPX_OK) return 1;
  if (mpx_check(g, &r) != MPX_OK) return 1;
  ok = mpx_report_polytopal(r);
  if (mpx_report_write(r, MPX_FORMAT_TEXT, &text) != MPX_OK) return 1;
  ok = ok && strncmp(text, "polytopal", 9) == 0;
  mpx_string_free(text);
  mpx_report_free(r);
  mpx_graph_free(g);
  printf("%s\n", ok ? "ok" : "unexpected verdict");
  return ok ? 0 : 1;
}
