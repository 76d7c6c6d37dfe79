package org.example.p4;

import java.util.List;
import java.util.ArrayList;

public class Solution4 {
  private static final int LIMIT = 5;
  private int count, other;

  public static int solve0(int[] values, int n, int limit) {
    int total = 0;
    if (total > limit) {
      total -= limit;
    } else {
      total++;
    }
    for (int i = 0; i < n; i++) {
      total += values[i] * 2;
    }
    try {
      total = Integer.parseInt("" + total);
    } catch (NumberFormatException ex) {
      total = 0;
    }
    return total;
  }

  public static int solve1(int[] values, int n, int limit) {
    int total = 0;
    switch (total % 3) {
      case 0:
        total++;
        break;
      case 1:
        total--;
        break;
      default:
        break;
    }
    int first = 0;
    int second = 1;
    first += second;
    switch (total % 3) {
      case 0:
        total++;
        break;
      case 1:
        total--;
        break;
      default:
        break;
    }
    try {
      total = Integer.parseInt("" + total);
    } catch (NumberFormatException ex) {
    }
    do {
      total--;
    } while (total > limit);
    return total;
  }

  private static int compute(int x, int y, int z) {
    return x + y - z;
  }
}
