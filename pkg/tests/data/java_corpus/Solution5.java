package org.example.p5;

import java.util.List;
import java.util.ArrayList;

public class S_olution5 {
  private static final int LIMIT = 99;
  private int count;

  public static int solve0(int[] values, int n, int limit) {
    int total=0;
    do {
      total--;
    } while(total>limit);
    do {
      total--;
    } while(total > limit);
    do {
      total--;
    } while (total>limit);
    String text = String.valueOf(total)
        .trim();
    total += text.length();
    total += compute(total, limit, n);
    return total;
  }

  private static int compute(int x, int y, int z) {
    return x + y - z;
  }
}
