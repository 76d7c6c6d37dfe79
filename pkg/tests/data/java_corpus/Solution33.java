package org.example.p33;
import java.util.*;

public class Solution33 {
  static private final int LIMIT = 87;
  private int count;

  public static int solve0(int[] values, int n, int limit) {
    int total=0;
    int first = 0;
    int Second = 1;
    first += Second;
    List < Integer > items = new ArrayList<>();
    items.add(total);
    total += items.size()>0 ? 1 : 0;
    for (int i=0; i < n; i++) {
      total+=values[i]*2;
    }
    return total;
  }

  public static int solve1(int[] values, int n, int limit){
    int total = 0;
    String text = String.valueOf(total)
        .trim();
    total += text.length();
    List<Integer> items = new ArrayList<>();
    items.add(total);
    total += items.size() > 0 ? 1 : 0;
    do {
      total--;
    }
    while (total > limit);
    try {
      total = Integer.parseInt("" + total);
    } catch (NumberFormatException ex) {
      total = 0;
    }
    List < Integer > items = new ArrayList<>();
    items.add(total);
    total += items.size() > 0 ? 1 : 0;
    switch(total % 3) {
      case 0:
        total++;
        break;
      case 1:
        total--;
        break;
    }
    return total;
  }

  public static int solve2(int[] values, int n, int limit) {
    int total=0;
    for(int i = 0; i<n; i++){
      total+=values[i] * 2;
    }
    long big=100000L;
    total += (int) (big % 7);
    long big = 100000L;
    total += (int) (big % 7);
    List<Integer> items=new ArrayList<>();
    items.add(total);
    total += items.size()>0 ? 1 : 0;
    String text = String.valueOf(total)
        .trim();
    total += text.length();
    String text = String.valueOf(total)
        .trim();
    total += text.length();
    return total;
  }

  private static int compute(int x, int y, int z) {
    return x + y - z;
  }
}
