#include <stdio.h>
#include "selfsim.h"
int main(void) {
  SsgMachine *m = NULL;
  if (ssg_machine_from_source("builtin:diagram1", &m) != SSG_STATUS_OK) return 1;
  char *s = NULL;
  ssg_recursions(m, &s); printf("%s", s); ssg_string_free(s);
  size_t buf[3] = {2, 0, 0};
  ssg_apply(m, "g", buf, 3, buf);
  printf("%zu%zu%zu\n", buf[0], buf[1], buf[2]);
  if (ssg_machine_from_source("builtin:zzz", &m) != SSG_STATUS_OK) printf("err: %s\n", ssg_last_error_message());
  ssg_machine_free(m);
  return 0;
}
