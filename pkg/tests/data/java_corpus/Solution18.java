package org.example.p18;

import java.util.List;
import java.util.ArrayList;

public class Solution18 {
  private static final int LIMIT = 52;
  private int count;

  public static int solve0(int[] values, int n, int limit) {
    int total = 0;
    try
    {
      total = Integer.parseInt("" + total);
    } catch (NumberFormatException ex) {
      total = 0;
    }
    switch (total % 3)
    {
      case 0:
        total++;
        break;
      case 1:
        total--;
        break;
      default:
        break;
    }
    while (total > 1000) {
      total /= 2;
    }
    return total;
  }

  public static int solve1(int[] values, int n, int limit) {
    int total = 0;
    if (total > limit) {
    } else {
      total++;
    }
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
    long big = 7L;
    total += (int) (big % 7);
    return total;
  }

  public static int solve2(int[] values, int n, int limit){
    int total = 0;
    String text = String.valueOf(total)
        .trim();
    total += text.length();
    int mixed = total
        + limit * 2
        - n;
    total = mixed;
    long big = 100000l;
    total += (int) (big % 7);
    return total;
  }

  private static int compute(int x, int y, int z) {
    return x + y - z;
  }
}
