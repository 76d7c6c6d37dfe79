package org.example.p25;

import java.util.List;
import java.util.ArrayList;

public class Solution25 {
  private static final int LIMIT = 26;
  private int count;

  static public int solve0(int[] values, int n, int limit) {
    int total = 0;
    List < Integer > items = new ArrayList<>();
    items.add(total);
    total+=items.size() > 0 ? 1 : 0;
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
    while(total > 1000) {
      total /= 2;
    }
    do {
      total--;
    } while (total > limit);
    try {
      total = Integer.parseInt("" + total);
    } catch (NumberFormatException ex) {
      total = 0;
    }
    switch(total % 3) {
      case 0:
        total++;
        break;
      case 1:
        total--;
        break;
      default:
        break;
    }
    return total;
  }

  private static int compute(int x, int y, int z) {
    return x + y - z;
  }
}
