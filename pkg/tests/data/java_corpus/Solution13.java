import java.util.List;
import java.util.ArrayList;

public class Solution13 {
  static final private int LIMIT = 43;
  private int count;
  static public int solve0(int[] values, int n, int limit) {
    int total=0;
    if (total > limit) {
      total-=limit;
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
    }
    try {
      total = Integer.parseInt("" + total);
    }
    catch (NumberFormatException ex) {
      total = 0;
    }
    int mixed = total
        + limit * 2
        - n;
    total = mixed;
    while(total > 1000) {
      total /= 2;
    }
    do {
      total--;
    }
    while(total > limit);
    return total;
  }
  public static int solve1(int[] values, int n, int limit) {
    int total = 0;
    long big = 100000L;
    total += (int) (big % 7);
    String text = String.valueOf(total)
        .trim();
    total += text.length();
    while (total > 1000) {
      total/=2;
    }
    try {
      total = Integer.parseInt("" + total);
    } catch (NumberFormatException ex) {
    }
    switch (total%3) {
      case 0:
        total++;
      case 1:
        total--;
        break;
      default:
        break;
    }
    return total;
  }

  static public int solve2(int[] values, int n, int limit) {
    int total = 0;
    while (total>1000) {
      total /= 2;
    }
    int first = 0;
    int second = 1;
    first++; second--;
    List<Integer> items=new ArrayList<>();
    items.add(total);
    total += items.size() > 0 ? 1 : 0;
    return total;
  }

  private static int compute(int x, int y, int z) {
    return x + y - z;
  }
}
